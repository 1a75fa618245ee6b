#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "holeminer/graph.hpp"
#include "holeminer/miners.hpp"
#include "holeminer/pruning.hpp"

namespace holeminer {

enum class ReportFormat { Json, Csv };

struct RunInfo {
  std::string command;
  LoadReport load;
};

// Full detection report. JSON keys are sorted and node sets are written with
// their labels, sorted by member id, so the pattern section is byte-stable
// across runs and algorithms.
std::string detect_report(const DirectedGraph& g, const PatternResult& r, const RunInfo& info,
                          ReportFormat format);

// Just the `patterns` section of the JSON report.
std::string pattern_payload(const DirectedGraph& g, const PatternResult& r);

std::string prune_stats_report(const PruneStats& s, ReportFormat format);

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::map<std::size_t, std::size_t> out_degree_histogram;
  std::map<std::size_t, std::size_t> in_degree_histogram;
};

GraphStats graph_stats(const DirectedGraph& g);
std::string graph_stats_report(const GraphStats& s, ReportFormat format);

}  // namespace holeminer
