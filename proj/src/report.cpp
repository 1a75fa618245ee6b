#include "holeminer/report.hpp"

#include <sstream>

#include "json.hpp"

namespace holeminer {

using nlohmann::json;

namespace {

json labels_of(const DirectedGraph& g, const NodeSet& s) {
  json arr = json::array();
  for (NodeId v : s) arr.push_back(g.label(v));
  return arr;
}

json patterns_json(const DirectedGraph& g, const PatternResult& r) {
  json out = json::array();
  for (std::size_t i = 1; i <= r.patterns.size(); ++i) {
    json sets = json::array();
    for (const NodeSet& s : r.of_size(i)) sets.push_back(labels_of(g, s));
    out.push_back({{"size", i}, {"count", r.of_size(i).size()}, {"sets", std::move(sets)}});
  }
  return out;
}

json prune_json(const PruneStats& s, bool with_components) {
  json j = {
      {"size", s.size},
      {"potential", s.potential},
      {"candidate", s.candidate},
      {"final", s.final_count},
      {"removed",
       {{"carried_over", s.carried_over},
        {"escaping_successor", s.escaping_successor},
        {"escaping_cascade", s.escaping_cascade},
        {"oversized_closure", s.oversized_closure},
        {"exact_closure", s.exact_closure},
        {"closure_cascade", s.closure_cascade}}},
      {"emitted", s.emitted},
  };
  if (with_components) j["final_components"] = s.final_components;
  return j;
}

}  // namespace

std::string pattern_payload(const DirectedGraph& g, const PatternResult& r) {
  return patterns_json(g, r).dump();
}

std::string detect_report(const DirectedGraph& g, const PatternResult& r, const RunInfo& info,
                          ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "size,members\n";
    for (std::size_t i = 1; i <= r.patterns.size(); ++i) {
      for (const NodeSet& s : r.of_size(i)) {
        out << i << ',';
        for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << g.label(s[k]);
        out << '\n';
      }
    }
    return out.str();
  }

  json warnings = json::array();
  if (info.load.self_loops_dropped) {
    warnings.push_back("dropped " + std::to_string(info.load.self_loops_dropped) +
                       " self-loop line(s)");
  }
  if (info.load.duplicates_collapsed) {
    warnings.push_back("collapsed " + std::to_string(info.load.duplicates_collapsed) +
                       " duplicate edge line(s)");
  }

  json j;
  j["command"] = info.command;
  j["algorithm"] = std::string(to_string(r.algorithm));
  j["kind"] = std::string(to_string(r.kind));
  j["max_size"] = r.max_size;
  j["input"] = {{"nodes", g.node_count()},
                {"edges", g.edge_count()},
                {"self_loops_dropped", info.load.self_loops_dropped},
                {"duplicates_collapsed", info.load.duplicates_collapsed}};
  j["patterns"] = patterns_json(g, r);
  j["timings_ms"] = r.timings_ms;
  if (!r.prune_stats.empty()) {
    json funnel = json::array();
    for (const PruneStats& s : r.prune_stats) {
      funnel.push_back(prune_json(s, r.algorithm == Algorithm::IBlackholeDC));
    }
    j["prune_stats"] = std::move(funnel);
  }
  j["warnings"] = std::move(warnings);
  j["status"] = "ok";
  return j.dump(2) + "\n";
}

std::string prune_stats_report(const PruneStats& s, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "size,potential,candidate,final,final_nodes,final_edges,final_components,emitted\n"
        << s.size << ',' << s.potential << ',' << s.candidate << ',' << s.final_count << ','
        << s.final_nodes << ',' << s.final_edges << ',' << s.final_components << ',' << s.emitted
        << '\n';
    return out.str();
  }
  json j = prune_json(s, true);
  j["final_subgraph"] = {{"nodes", s.final_nodes},
                         {"edges", s.final_edges},
                         {"components", s.final_components}};
  return j.dump(2) + "\n";
}

GraphStats graph_stats(const DirectedGraph& g) {
  GraphStats s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.components = weak_components(g).size();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    ++s.out_degree_histogram[g.out_degree(v)];
    ++s.in_degree_histogram[g.in_degree(v)];
  }
  return s;
}

std::string graph_stats_report(const GraphStats& s, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "metric,key,value\n"
        << "nodes,," << s.nodes << '\n'
        << "edges,," << s.edges << '\n'
        << "components,," << s.components << '\n';
    for (auto [d, c] : s.out_degree_histogram) out << "out_degree," << d << ',' << c << '\n';
    for (auto [d, c] : s.in_degree_histogram) out << "in_degree," << d << ',' << c << '\n';
    return out.str();
  }
  auto hist = [](const std::map<std::size_t, std::size_t>& h) {
    json arr = json::array();
    for (auto [d, c] : h) arr.push_back({{"degree", d}, {"count", c}});
    return arr;
  };
  json j = {{"nodes", s.nodes},
            {"edges", s.edges},
            {"components", s.components},
            {"out_degree_histogram", hist(s.out_degree_histogram)},
            {"in_degree_histogram", hist(s.in_degree_histogram)}};
  return j.dump(2) + "\n";
}

}  // namespace holeminer
