#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "holeminer/graph.hpp"
#include "holeminer/pattern.hpp"
#include "holeminer/pruning.hpp"

namespace holeminer {

enum class Algorithm { BruteForce, IBlackhole, IBlackholeDC };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view text);

inline constexpr std::uint64_t kDefaultGuardLimit = 1'000'000'000;

struct MiningConfig {
  std::size_t max_size = 1;
  Algorithm algorithm = Algorithm::IBlackholeDC;
  PatternKind kind = PatternKind::Blackhole;
  bool parallel = false;
  std::uint64_t guard_limit = kDefaultGuardLimit;
};

struct PatternResult {
  PatternKind kind = PatternKind::Blackhole;
  Algorithm algorithm = Algorithm::BruteForce;
  std::size_t max_size = 0;
  // patterns[i - 1] holds the sorted, distinct i-node patterns.
  std::vector<std::vector<NodeSet>> patterns;
  std::vector<double> timings_ms;
  // Empty for brute force.
  std::vector<PruneStats> prune_stats;

  const std::vector<NodeSet>& of_size(std::size_t i) const { return patterns.at(i - 1); }
  std::size_t total() const;
  double total_ms() const;
};

// Binomial coefficient in floating point; exact for the magnitudes the guard
// compares against.
double choose(std::size_t n, std::size_t k);

// Exhaustive reference search: every i-subset of `scope` (all nodes when
// absent) for i = 1..max_size, in lexicographic order, checked for weak
// connectivity and zero out-weight. Throws GuardLimitExceeded before starting
// when the total number of subsets exceeds the guard.
PatternResult mine_brute_force(const DirectedGraph& g, std::size_t max_size,
                               const std::optional<NodeSet>& scope = std::nullopt,
                               std::uint64_t guard_limit = kDefaultGuardLimit,
                               bool parallel = false);

// Pruned search: per size, the potential/candidate/final funnel, then the
// exhaustive search over the final list.
PatternResult mine_iblackhole(const DirectedGraph& g, std::size_t max_size,
                              std::uint64_t guard_limit = kDefaultGuardLimit);

// As mine_iblackhole, but the exhaustive step runs separately inside each weak
// component of the final list's induced subgraph.
PatternResult mine_iblackhole_dc(const DirectedGraph& g, std::size_t max_size,
                                 std::uint64_t guard_limit = kDefaultGuardLimit,
                                 bool parallel = false);

// Dispatches on the configured algorithm; volcano requests are mined as
// blackholes of the reversed graph (node ids are unchanged by reversal).
PatternResult mine(const DirectedGraph& g, const MiningConfig& cfg);

}  // namespace holeminer
