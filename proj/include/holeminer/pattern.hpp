#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "holeminer/graph.hpp"

namespace holeminer {

enum class PatternKind { Blackhole, Volcano };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> parse_pattern_kind(std::string_view text);

// Total weight of edges entering / leaving a node set across its boundary.
struct WeightSummary {
  double in_weight = 0.0;
  double out_weight = 0.0;
};

WeightSummary boundary_weights(const DirectedGraph& g, const NodeSet& b);

// General threshold form: weakly connected (for |b| >= 2) and
// in/out (blackhole) or out/in (volcano) strictly above theta. A zero
// denominator counts as +inf when the numerator is positive; 0/0 fails.
bool satisfies_ratio(const DirectedGraph& g, const NodeSet& b, PatternKind kind, double theta);

// Unit-weight form that the miners search for: weakly connected and no edge
// leaves the set.
bool is_simplified_blackhole(const DirectedGraph& g, const NodeSet& b);

// Direct evaluation of the volcano condition (no edge enters the set) on g
// itself, without going through graph reversal. Kept as an independent check
// of the duality.
bool is_simplified_volcano(const DirectedGraph& g, const NodeSet& b);

// Maps a mining request onto blackhole mining: volcanoes of g are exactly the
// blackholes of reverse(g).
std::pair<PatternKind, DirectedGraph> dualize(PatternKind kind, const DirectedGraph& g);

}  // namespace holeminer
