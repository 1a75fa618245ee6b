#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace holeminer {

using NodeId = std::uint32_t;

struct Neighbor {
  NodeId node;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  NodeId src;
  NodeId dst;
  double weight = 1.0;
};

// Sorted, duplicate-free set of node ids. Two sets are equal iff their
// member sequences are equal.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> members);
  NodeSet(std::initializer_list<NodeId> members);

  std::span<const NodeId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(NodeId v) const noexcept;
  bool is_subset_of(const NodeSet& other) const noexcept;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  NodeId operator[](std::size_t i) const noexcept { return members_[i]; }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> members_;
};

// Per-node membership flags; the working representation for pruning lists.
using Membership = std::vector<std::uint8_t>;

// Immutable weighted digraph in compressed adjacency form, with both forward
// and reverse lists sorted by neighbour id. Copies share storage.
class DirectedGraph {
 public:
  DirectedGraph();

  // Builds from dense ids. Throws ContractViolation on self-loops, duplicate
  // (src,dst) pairs, non-positive weights, or labels.size() != node_count.
  static DirectedGraph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);
  // Convenience for tests and fixtures: nodes are labelled "0", "1", ...
  static DirectedGraph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept;
  std::size_t edge_count() const noexcept;

  std::span<const Neighbor> successors(NodeId v) const;
  std::span<const Neighbor> predecessors(NodeId v) const;
  std::size_t out_degree(NodeId v) const;
  std::size_t in_degree(NodeId v) const;

  const std::string& label(NodeId v) const;
  std::span<const std::string> labels() const noexcept;
  // Returns node_count() when the label is unknown.
  NodeId find(std::string_view label) const;

  std::vector<Edge> edges() const;

  // Structural equality: same labels in the same order and same edges.
  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

 private:
  struct Storage;
  explicit DirectedGraph(std::shared_ptr<const Storage> s);
  void check(NodeId v) const;

  std::shared_ptr<const Storage> s_;
};

struct LoadReport {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
  std::size_t comment_lines = 0;
};

struct LoadedGraph {
  DirectedGraph graph;
  LoadReport report;
};

// Edge-list text: `src dst [weight]` per line, `#` comments, optional leading
// `v <label>` declarations (used for isolated nodes). Labels are interned in
// order of first appearance.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list(std::string_view text);
LoadedGraph load_edge_list_file(const std::string& path);

// Writes a file that load_edge_list reads back to an equal graph: one `v`
// declaration per node, then every edge with an explicit weight.
void write_edge_list(const DirectedGraph& g, std::ostream& out);

DirectedGraph reverse(const DirectedGraph& g);

// Nodes of the result are s's members in ascending order (node k of the
// result is s[k]); labels carry over.
DirectedGraph induced_subgraph(const DirectedGraph& g, const NodeSet& s);

bool is_weakly_connected(const DirectedGraph& g, const NodeSet& s);

// Maximal weakly connected node sets, ordered by smallest member.
std::vector<NodeSet> weak_components(const DirectedGraph& g);
// Same, restricted to the subgraph induced by the flagged nodes.
std::vector<NodeSet> weak_components(const DirectedGraph& g, const Membership& alive);

NodeSet closure(const DirectedGraph& g, NodeId v);

struct BoundedClosure {
  NodeSet nodes;
  bool exceeded = false;
};

// Forward traversal that stops once more than `cap` nodes are collected; the
// partial set then has cap + 1 members.
BoundedClosure closure_bounded(const DirectedGraph& g, NodeId v, std::size_t cap);

}  // namespace holeminer
