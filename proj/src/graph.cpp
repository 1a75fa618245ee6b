#include "holeminer/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "holeminer/errors.hpp"
#include "union_find.hpp"

namespace holeminer {

// ---------------------------------------------------------------------------
// NodeSet

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet::NodeSet(std::initializer_list<NodeId> members) : NodeSet(std::vector<NodeId>(members)) {}

bool NodeSet::contains(NodeId v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool NodeSet::is_subset_of(const NodeSet& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

// ---------------------------------------------------------------------------
// DirectedGraph

struct DirectedGraph::Storage {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::size_t> fwd_offsets{0};
  std::vector<Neighbor> fwd;
  std::vector<std::size_t> rev_offsets{0};
  std::vector<Neighbor> rev;
};

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) { return (std::uint64_t{a} << 32) | b; }

// Bucket edges by `key` node into a sorted compressed adjacency.
void build_adjacency(std::size_t n, std::span<const Edge> edges, bool forward,
                     std::vector<std::size_t>& offsets, std::vector<Neighbor>& out) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(forward ? e.src : e.dst) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  out.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    NodeId key = forward ? e.src : e.dst;
    NodeId other = forward ? e.dst : e.src;
    out[cursor[key]++] = Neighbor{other, e.weight};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              out.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

}  // namespace

DirectedGraph::DirectedGraph() : s_(std::make_shared<const Storage>()) {}

DirectedGraph::DirectedGraph(std::shared_ptr<const Storage> s) : s_(std::move(s)) {}

DirectedGraph DirectedGraph::from_edges(std::vector<std::string> labels,
                                        std::span<const Edge> edges) {
  auto s = std::make_shared<Storage>();
  const std::size_t n = labels.size();
  s->index.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!s->index.emplace(labels[v], static_cast<NodeId>(v)).second) {
      throw ContractViolation("duplicate node label '" + labels[v] + "'");
    }
  }
  s->labels = std::move(labels);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) throw RangeError("edge endpoint out of range");
    if (e.src == e.dst) throw ContractViolation("self-loop on node " + std::to_string(e.src));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ContractViolation("edge weight must be positive and finite");
    }
    if (!seen.insert(pair_key(e.src, e.dst)).second) {
      throw ContractViolation("duplicate edge " + std::to_string(e.src) + "->" +
                              std::to_string(e.dst));
    }
  }
  build_adjacency(n, edges, true, s->fwd_offsets, s->fwd);
  build_adjacency(n, edges, false, s->rev_offsets, s->rev);
  return DirectedGraph(std::move(s));
}

DirectedGraph DirectedGraph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  std::vector<std::string> labels(node_count);
  for (std::size_t v = 0; v < node_count; ++v) labels[v] = std::to_string(v);
  return from_edges(std::move(labels), edges);
}

std::size_t DirectedGraph::node_count() const noexcept { return s_->labels.size(); }
std::size_t DirectedGraph::edge_count() const noexcept { return s_->fwd.size(); }

void DirectedGraph::check(NodeId v) const {
  if (v >= node_count()) {
    throw RangeError("node id " + std::to_string(v) + " out of range (node count " +
                     std::to_string(node_count()) + ")");
  }
}

std::span<const Neighbor> DirectedGraph::successors(NodeId v) const {
  check(v);
  return {s_->fwd.data() + s_->fwd_offsets[v], s_->fwd_offsets[v + 1] - s_->fwd_offsets[v]};
}

std::span<const Neighbor> DirectedGraph::predecessors(NodeId v) const {
  check(v);
  return {s_->rev.data() + s_->rev_offsets[v], s_->rev_offsets[v + 1] - s_->rev_offsets[v]};
}

std::size_t DirectedGraph::out_degree(NodeId v) const { return successors(v).size(); }
std::size_t DirectedGraph::in_degree(NodeId v) const { return predecessors(v).size(); }

const std::string& DirectedGraph::label(NodeId v) const {
  check(v);
  return s_->labels[v];
}

std::span<const std::string> DirectedGraph::labels() const noexcept { return s_->labels; }

NodeId DirectedGraph::find(std::string_view label) const {
  auto it = s_->index.find(std::string(label));
  return it == s_->index.end() ? static_cast<NodeId>(node_count()) : it->second;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    for (const Neighbor& nb : successors(v)) out.push_back({v, nb.node, nb.weight});
  }
  return out;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.s_ == b.s_) return true;
  return a.s_->labels == b.s_->labels && a.s_->fwd_offsets == b.s_->fwd_offsets &&
         a.s_->fwd == b.s_->fwd;
}

// ---------------------------------------------------------------------------
// Edge-list text

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(w)) {
    throw ParseError("weight '" + std::string(tok) + "' is not a number", line_no);
  }
  if (!(w > 0.0)) throw ParseError("weight must be positive, got '" + std::string(tok) + "'", line_no);
  return w;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  LoadReport report;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  bool in_preamble = true;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#') {
      ++report.comment_lines;
      continue;
    }
    if (in_preamble && tokens.size() == 2 && tokens[0] == "v") {
      intern(tokens[1]);
      continue;
    }
    in_preamble = false;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError("expected 'src dst [weight]', got " + std::to_string(tokens.size()) +
                           " token(s)",
                       line_no);
    }
    const double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
    const NodeId src = intern(tokens[0]);
    const NodeId dst = intern(tokens[1]);
    if (src == dst) {
      ++report.self_loops_dropped;
      continue;
    }
    if (!seen.insert(pair_key(src, dst)).second) {
      ++report.duplicates_collapsed;
      continue;
    }
    edges.push_back({src, dst, w});
  }
  return {DirectedGraph::from_edges(std::move(labels), edges), report};
}

LoadedGraph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return load_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

void write_edge_list(const DirectedGraph& g, std::ostream& out) {
  out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  for (const std::string& l : g.labels()) out << "v " << l << '\n';
  char buf[32];
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const Neighbor& nb : g.successors(v)) {
      auto res = std::to_chars(buf, buf + sizeof buf, nb.weight);
      out << g.label(v) << ' ' << g.label(nb.node) << ' ' << std::string_view(buf, res.ptr - buf)
          << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Structural queries

DirectedGraph reverse(const DirectedGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) std::swap(e.src, e.dst);
  return DirectedGraph::from_edges(std::vector<std::string>(g.labels().begin(), g.labels().end()),
                                   edges);
}

DirectedGraph induced_subgraph(const DirectedGraph& g, const NodeSet& s) {
  std::unordered_map<NodeId, NodeId> local;
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (NodeId v : s) {
    labels.push_back(g.label(v));
    local.emplace(v, static_cast<NodeId>(local.size()));
  }
  std::vector<Edge> edges;
  for (NodeId v : s) {
    for (const Neighbor& nb : g.successors(v)) {
      auto it = local.find(nb.node);
      if (it != local.end()) edges.push_back({local[v], it->second, nb.weight});
    }
  }
  return DirectedGraph::from_edges(std::move(labels), edges);
}

bool is_weakly_connected(const DirectedGraph& g, const NodeSet& s) {
  if (s.empty()) throw ContractViolation("is_weakly_connected: empty node set");
  for (NodeId v : s) {
    if (v >= g.node_count()) throw RangeError("node id " + std::to_string(v) + " out of range");
  }
  if (s.size() == 1) return true;

  std::vector<std::uint8_t> reached(s.size(), 0);
  std::vector<std::size_t> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  auto visit = [&](NodeId u) {
    auto it = std::lower_bound(s.begin(), s.end(), u);
    if (it == s.end() || *it != u) return;
    auto k = static_cast<std::size_t>(it - s.begin());
    if (!reached[k]) {
      reached[k] = 1;
      ++count;
      stack.push_back(k);
    }
  };
  while (!stack.empty()) {
    NodeId v = s[stack.back()];
    stack.pop_back();
    for (const Neighbor& nb : g.successors(v)) visit(nb.node);
    for (const Neighbor& nb : g.predecessors(v)) visit(nb.node);
  }
  return count == s.size();
}

std::vector<NodeSet> weak_components(const DirectedGraph& g) {
  return weak_components(g, Membership(g.node_count(), 1));
}

std::vector<NodeSet> weak_components(const DirectedGraph& g, const Membership& alive) {
  const std::size_t n = g.node_count();
  if (alive.size() != n) throw ContractViolation("membership size does not match node count");
  UnionFind uf(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (const Neighbor& nb : g.successors(v)) {
      if (alive[nb.node]) uf.unite(v, nb.node);
    }
  }
  // Components are discovered in ascending order of their smallest member.
  std::vector<std::int64_t> slot(n, -1);
  std::vector<std::vector<NodeId>> groups;
  for (NodeId v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    auto root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[root])].push_back(v);
  }
  std::vector<NodeSet> out;
  out.reserve(groups.size());
  for (auto& grp : groups) out.emplace_back(std::move(grp));
  return out;
}

NodeSet closure(const DirectedGraph& g, NodeId v) {
  return closure_bounded(g, v, std::max<std::size_t>(g.node_count(), 1)).nodes;
}

BoundedClosure closure_bounded(const DirectedGraph& g, NodeId v, std::size_t cap) {
  if (cap < 1) throw ContractViolation("closure_bounded: cap must be at least 1");
  g.successors(v);  // range check

  // Closures probed during pruning are small, so a short visited list beats a
  // node_count-sized bitmap there.
  constexpr std::size_t kLinearScanCap = 64;
  std::vector<std::uint8_t> bitmap;
  if (cap >= kLinearScanCap) bitmap.assign(g.node_count(), 0);
  std::vector<NodeId> found{v};
  std::vector<NodeId> frontier{v};
  if (!bitmap.empty()) bitmap[v] = 1;
  auto seen = [&](NodeId u) {
    if (!bitmap.empty()) {
      if (bitmap[u]) return true;
      bitmap[u] = 1;
      return false;
    }
    return std::find(found.begin(), found.end(), u) != found.end();
  };
  while (!frontier.empty()) {
    NodeId u = frontier.back();
    frontier.pop_back();
    for (const Neighbor& nb : g.successors(u)) {
      if (seen(nb.node)) continue;
      found.push_back(nb.node);
      if (found.size() > cap) return {NodeSet(std::move(found)), true};
      frontier.push_back(nb.node);
    }
  }
  return {NodeSet(std::move(found)), false};
}

}  // namespace holeminer
