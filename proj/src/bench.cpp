#include "holeminer/bench.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "holeminer/errors.hpp"

namespace holeminer {

double median(std::vector<double> values) {
  if (values.empty()) throw ContractViolation("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<BenchRow> run_bench(const DirectedGraph& g, const BenchOptions& opts) {
  if (opts.max_size < 1) throw ContractViolation("bench: max size must be at least 1");
  if (opts.repeats < 1) throw ContractViolation("bench: repeats must be at least 1");
  if (opts.algorithms.empty()) throw ContractViolation("bench: no algorithms selected");

  std::vector<BenchRow> rows;
  // Reference patterns per size from the first algorithm that completed it.
  std::map<std::size_t, std::pair<Algorithm, std::vector<NodeSet>>> reference;
  for (Algorithm algo : opts.algorithms) {
    for (std::size_t i = 1; i <= opts.max_size; ++i) {
      MiningConfig cfg;
      cfg.max_size = i;
      cfg.algorithm = algo;
      cfg.guard_limit = opts.guard_limit;
      std::vector<double> times;
      PatternResult last;
      try {
        for (std::size_t rep = 0; rep < opts.repeats; ++rep) {
          last = mine(g, cfg);
          times.push_back(last.total_ms());
        }
      } catch (const GuardLimitExceeded&) {
        rows.push_back({algo, i, std::nullopt, std::nullopt});
        continue;
      }
      const auto& sets = last.of_size(i);
      auto [it, fresh] = reference.try_emplace(i, algo, sets);
      if (!fresh && it->second.second != sets) {
        throw CorrectnessFailure("size " + std::to_string(i) + ": " +
                                 std::string(to_string(algo)) + " found " +
                                 std::to_string(sets.size()) + " pattern(s), " +
                                 std::string(to_string(it->second.first)) + " found " +
                                 std::to_string(it->second.second.size()));
      }
      rows.push_back({algo, i, median(times), sets.size()});
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "algorithm,size,wall_ms,pattern_count\n";
  for (const BenchRow& r : rows) {
    out << to_string(r.algorithm) << ',' << r.size << ',';
    if (r.wall_ms) out << *r.wall_ms; else out << "NA";
    out << ',';
    if (r.pattern_count) out << *r.pattern_count; else out << "NA";
    out << '\n';
  }
  return out.str();
}

}  // namespace holeminer
