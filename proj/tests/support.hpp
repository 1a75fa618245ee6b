#pragma once

// Shared fixtures and independent reference checks for the test suites. The
// oracles here work from the raw edge list with bitmask subsets and never call
// into the library's predicates or miners.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "holeminer/graph.hpp"

namespace holeminer::testing {

// nodes a, b, c; a -> b -> c
inline DirectedGraph chain() { return load_edge_list("a b\nb c\n").graph; }

// nodes x, y, u, v; two disjoint 2-cycles
inline DirectedGraph cycles() { return load_edge_list("x y\ny x\nu v\nv u\n").graph; }

// Erdos-Renyi style digraph: every ordered pair (u, v), u != v, independently
// with probability p.
inline DirectedGraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v, 1.0});
    }
  }
  return DirectedGraph::from_edges(n, edges);
}

struct CorpusGraph {
  DirectedGraph graph;
  std::string name;
};

// >= 200 seeded graphs with 5..15 nodes at edge probabilities .05/.1/.2/.3.
inline std::vector<CorpusGraph> random_corpus() {
  std::vector<CorpusGraph> out;
  const double probs[] = {0.05, 0.1, 0.2, 0.3};
  std::uint64_t seed = 20090628;
  for (std::size_t n = 5; n <= 15; ++n) {
    for (double p : probs) {
      for (int rep = 0; rep < 5; ++rep) {
        ++seed;
        out.push_back({random_digraph(n, p, seed),
                       "n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" +
                           std::to_string(seed)});
      }
    }
  }
  return out;
}

using Mask = std::uint32_t;

inline std::vector<NodeId> mask_members(Mask m) {
  std::vector<NodeId> out;
  for (NodeId v = 0; m; ++v, m >>= 1) {
    if (m & 1u) out.push_back(v);
  }
  return out;
}

// Weak connectivity of the subgraph induced by `m`, via label propagation on
// the undirected edge list.
inline bool oracle_connected(std::size_t n, const std::vector<Edge>& edges, Mask m) {
  if (m == 0) return false;
  std::vector<int> comp(n);
  for (std::size_t v = 0; v < n; ++v) comp[v] = static_cast<int>(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : edges) {
      if (!((m >> e.src) & 1u) || !((m >> e.dst) & 1u)) continue;
      int lo = std::min(comp[e.src], comp[e.dst]);
      if (comp[e.src] != lo || comp[e.dst] != lo) {
        comp[e.src] = comp[e.dst] = lo;
        changed = true;
      }
    }
  }
  int root = -1;
  for (NodeId v : mask_members(m)) {
    if (root < 0) root = comp[v];
    if (comp[v] != root) return false;
  }
  return true;
}

// Exhaustive blackhole oracle: sets[i] holds every i-node set (i <= max_size)
// that is weakly connected with no edge leaving it.
inline std::vector<std::set<std::vector<NodeId>>> oracle_blackholes(const DirectedGraph& g,
                                                                    std::size_t max_size) {
  const std::size_t n = g.node_count();
  const auto edges = g.edges();
  std::vector<std::set<std::vector<NodeId>>> out(max_size + 1);
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(m));
    if (size > max_size) continue;
    bool leaks = false;
    for (const Edge& e : edges) {
      if (((m >> e.src) & 1u) && !((m >> e.dst) & 1u)) {
        leaks = true;
        break;
      }
    }
    if (!leaks && oracle_connected(n, edges, m)) out[size].insert(mask_members(m));
  }
  return out;
}

// Volcano oracle evaluated directly on g: weakly connected, no edge entering.
inline std::vector<std::set<std::vector<NodeId>>> oracle_volcanoes(const DirectedGraph& g,
                                                                   std::size_t max_size) {
  const std::size_t n = g.node_count();
  const auto edges = g.edges();
  std::vector<std::set<std::vector<NodeId>>> out(max_size + 1);
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(m));
    if (size > max_size) continue;
    bool feeds = false;
    for (const Edge& e : edges) {
      if (!((m >> e.src) & 1u) && ((m >> e.dst) & 1u)) {
        feeds = true;
        break;
      }
    }
    if (!feeds && oracle_connected(n, edges, m)) out[size].insert(mask_members(m));
  }
  return out;
}

inline std::set<std::vector<NodeId>> as_set(const std::vector<NodeSet>& sets) {
  std::set<std::vector<NodeId>> out;
  for (const NodeSet& s : sets) out.emplace(s.begin(), s.end());
  return out;
}

// Reachability by repeated relaxation over the edge list.
inline std::set<NodeId> oracle_closure(const DirectedGraph& g, NodeId v) {
  const auto edges = g.edges();
  std::set<NodeId> reach{v};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : edges) {
      if (reach.count(e.src) && reach.insert(e.dst).second) changed = true;
    }
  }
  return reach;
}

}  // namespace holeminer::testing
