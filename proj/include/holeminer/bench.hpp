#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holeminer/graph.hpp"
#include "holeminer/miners.hpp"

namespace holeminer {

struct BenchOptions {
  std::size_t max_size = 1;
  std::vector<Algorithm> algorithms{Algorithm::BruteForce, Algorithm::IBlackhole,
                                    Algorithm::IBlackholeDC};
  std::size_t repeats = 3;
  std::uint64_t guard_limit = kDefaultGuardLimit;
};

// One (algorithm, size) cell. wall_ms is the median over repeats of mining
// sizes 1..size; both fields are empty when the guard refused that size.
struct BenchRow {
  Algorithm algorithm;
  std::size_t size;
  std::optional<double> wall_ms;
  std::optional<std::size_t> pattern_count;
};

// Rows are ordered by algorithm (as given), then size. Throws
// CorrectnessFailure if two algorithms that both completed a size disagree
// on its patterns.
std::vector<BenchRow> run_bench(const DirectedGraph& g, const BenchOptions& opts);

std::string bench_csv(const std::vector<BenchRow>& rows);

double median(std::vector<double> values);

}  // namespace holeminer
