#include "holeminer/pruning.hpp"

#include <algorithm>

#include "holeminer/errors.hpp"

namespace holeminer {

std::size_t count(const Membership& m) {
  return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](auto f) { return f != 0; }));
}

namespace {

void require_size(std::size_t size) {
  if (size < 1) throw ContractViolation("pattern size must be at least 1");
}

void require_shape(const DirectedGraph& g, const Membership& m, const char* what) {
  if (m.size() != g.node_count()) {
    throw ContractViolation(std::string(what) + ": membership size does not match node count");
  }
}

// Clears `v` and, transitively, every predecessor still alive. Returns the
// number of predecessors removed (v itself excluded).
std::size_t cascade_remove(const DirectedGraph& g, Membership& alive, NodeId v,
                           std::vector<NodeId>& work) {
  alive[v] = 0;
  std::size_t removed = 0;
  work.clear();
  work.push_back(v);
  while (!work.empty()) {
    NodeId u = work.back();
    work.pop_back();
    for (const Neighbor& p : g.predecessors(u)) {
      if (!alive[p.node]) continue;
      alive[p.node] = 0;
      ++removed;
      work.push_back(p.node);
    }
  }
  return removed;
}

}  // namespace

Membership potential_list(const DirectedGraph& g, std::size_t size) {
  require_size(size);
  Membership p(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) p[v] = g.out_degree(v) < size ? 1 : 0;
  return p;
}

Membership candidate_list(const DirectedGraph& g, std::size_t size, const Membership& potential,
                          const Membership& carried, PruneStats* stats) {
  require_size(size);
  require_shape(g, potential, "candidate_list");
  const bool has_carried = !carried.empty();
  if (has_carried) {
    require_shape(g, carried, "candidate_list");
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!carried[v]) continue;
      if (!potential[v]) throw ContractViolation("carried node outside the potential list");
      for (const Neighbor& s : g.successors(v)) {
        if (!carried[s.node]) throw ContractViolation("carried list is not successor-closed");
      }
    }
  }

  Membership alive = potential;
  PruneStats local;
  std::vector<NodeId> work;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!alive[v]) continue;
    if (has_carried && carried[v]) {
      ++local.carried_over;
      continue;
    }
    const auto succ = g.successors(v);
    const bool escapes =
        std::any_of(succ.begin(), succ.end(), [&](const Neighbor& s) { return !alive[s.node]; });
    if (!escapes) continue;
    ++local.escaping_successor;
    local.escaping_cascade += cascade_remove(g, alive, v, work);
  }

  if (stats) {
    stats->size = size;
    stats->potential = count(potential);
    stats->candidate = count(alive);
    stats->carried_over = local.carried_over;
    stats->escaping_successor = local.escaping_successor;
    stats->escaping_cascade = local.escaping_cascade;
  }
  return alive;
}

FinalList final_list(const DirectedGraph& g, std::size_t size, const Membership& candidate,
                     PruneStats* stats) {
  require_size(size);
  require_shape(g, candidate, "final_list");

  FinalList out{candidate, {}};
  Membership& alive = out.alive;
  PruneStats local;
  std::vector<NodeId> work;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!alive[v]) continue;
    BoundedClosure c = closure_bounded(g, v, size);
    if (c.exceeded) {
      ++local.oversized_closure;
      local.closure_cascade += cascade_remove(g, alive, v, work);
    } else if (c.nodes.size() == size) {
      ++local.exact_closure;
      out.emitted.push_back(std::move(c.nodes));
      local.closure_cascade += cascade_remove(g, alive, v, work);
    }
  }
  std::sort(out.emitted.begin(), out.emitted.end());
  out.emitted.erase(std::unique(out.emitted.begin(), out.emitted.end()), out.emitted.end());

  if (stats) {
    stats->size = size;
    stats->candidate = count(candidate);
    stats->final_count = count(alive);
    stats->oversized_closure = local.oversized_closure;
    stats->exact_closure = local.exact_closure;
    stats->closure_cascade = local.closure_cascade;
    stats->emitted = out.emitted.size();
  }
  return out;
}

PruneOutcome prune(const DirectedGraph& g, std::size_t size, const Membership& carried) {
  PruneOutcome o;
  o.potential = potential_list(g, size);
  o.candidate = candidate_list(g, size, o.potential, carried, &o.stats);
  o.final = final_list(g, size, o.candidate, &o.stats);
  return o;
}

PruneStats prune_stats(const DirectedGraph& g, std::size_t size) {
  require_size(size);
  Membership carried;
  PruneOutcome o;
  for (std::size_t i = 1; i <= size; ++i) {
    o = prune(g, i, carried);
    carried = o.candidate;
  }
  PruneStats s = o.stats;
  const Membership& f = o.final.alive;
  s.final_nodes = count(f);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!f[v]) continue;
    for (const Neighbor& nb : g.successors(v)) s.final_edges += f[nb.node] ? 1 : 0;
  }
  s.final_components = weak_components(g, f).size();
  return s;
}

}  // namespace holeminer
