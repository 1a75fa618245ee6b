#include "holeminer/pattern.hpp"

#include "holeminer/errors.hpp"

namespace holeminer {

std::string_view to_string(PatternKind kind) {
  return kind == PatternKind::Blackhole ? "blackhole" : "volcano";
}

std::optional<PatternKind> parse_pattern_kind(std::string_view text) {
  if (text == "blackhole") return PatternKind::Blackhole;
  if (text == "volcano") return PatternKind::Volcano;
  return std::nullopt;
}

namespace {

void require_nonempty(const NodeSet& b, const char* op) {
  if (b.empty()) throw ContractViolation(std::string(op) + ": empty node set");
}

}  // namespace

WeightSummary boundary_weights(const DirectedGraph& g, const NodeSet& b) {
  require_nonempty(b, "boundary_weights");
  WeightSummary w;
  for (NodeId v : b) {
    for (const Neighbor& nb : g.successors(v)) {
      if (!b.contains(nb.node)) w.out_weight += nb.weight;
    }
    for (const Neighbor& nb : g.predecessors(v)) {
      if (!b.contains(nb.node)) w.in_weight += nb.weight;
    }
  }
  return w;
}

bool satisfies_ratio(const DirectedGraph& g, const NodeSet& b, PatternKind kind, double theta) {
  if (!(theta > 0.0)) throw ContractViolation("satisfies_ratio: theta must be positive");
  require_nonempty(b, "satisfies_ratio");
  if (!is_weakly_connected(g, b)) return false;
  const WeightSummary w = boundary_weights(g, b);
  const double num = kind == PatternKind::Blackhole ? w.in_weight : w.out_weight;
  const double den = kind == PatternKind::Blackhole ? w.out_weight : w.in_weight;
  if (den == 0.0) return num > 0.0;
  return num / den > theta;
}

bool is_simplified_blackhole(const DirectedGraph& g, const NodeSet& b) {
  require_nonempty(b, "is_simplified_blackhole");
  for (NodeId v : b) {
    for (const Neighbor& nb : g.successors(v)) {
      if (!b.contains(nb.node)) return false;
    }
  }
  return is_weakly_connected(g, b);
}

bool is_simplified_volcano(const DirectedGraph& g, const NodeSet& b) {
  require_nonempty(b, "is_simplified_volcano");
  for (NodeId v : b) {
    for (const Neighbor& nb : g.predecessors(v)) {
      if (!b.contains(nb.node)) return false;
    }
  }
  return is_weakly_connected(g, b);
}

std::pair<PatternKind, DirectedGraph> dualize(PatternKind kind, const DirectedGraph& g) {
  if (kind == PatternKind::Volcano) return {PatternKind::Blackhole, reverse(g)};
  return {PatternKind::Blackhole, g};
}

}  // namespace holeminer
