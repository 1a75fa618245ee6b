#include "holeminer/holeminer.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <string_view>

#include "holeminer/bench.hpp"
#include "holeminer/errors.hpp"
#include "holeminer/graph.hpp"
#include "holeminer/miners.hpp"
#include "holeminer/report.hpp"
#include "holeminer/stock_net.hpp"

struct hm_graph {
  holeminer::DirectedGraph graph;
  holeminer::LoadReport load;
};

struct hm_result {
  holeminer::DirectedGraph graph;
  holeminer::LoadReport load;
  holeminer::PatternResult result;
};

struct hm_prices {
  holeminer::LoadedPrices loaded;
};

namespace {

thread_local std::string last_error;

hm_status fail(hm_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs `fn`, translating library exceptions into status codes.
template <class F>
hm_status guarded(F&& fn) {
  last_error.clear();
  try {
    fn();
    return HM_OK;
  } catch (const holeminer::ParseError& e) {
    return fail(HM_ERR_INPUT, e.what());
  } catch (const holeminer::GuardLimitExceeded& e) {
    return fail(HM_ERR_GUARD, e.what());
  } catch (const holeminer::CorrectnessFailure& e) {
    return fail(HM_ERR_CORRECTNESS, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(HM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(HM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

holeminer::ReportFormat to_format(hm_format f) {
  switch (f) {
    case HM_FORMAT_JSON: return holeminer::ReportFormat::Json;
    case HM_FORMAT_CSV: return holeminer::ReportFormat::Csv;
  }
  throw holeminer::ContractViolation("unknown output format");
}

holeminer::Algorithm to_algorithm(hm_algorithm a) {
  switch (a) {
    case HM_ALGO_BRUTE_FORCE: return holeminer::Algorithm::BruteForce;
    case HM_ALGO_IBLACKHOLE: return holeminer::Algorithm::IBlackhole;
    case HM_ALGO_IBLACKHOLE_DC: return holeminer::Algorithm::IBlackholeDC;
  }
  throw holeminer::ContractViolation("unknown algorithm");
}

holeminer::PatternKind to_kind(hm_pattern p) {
  switch (p) {
    case HM_PATTERN_BLACKHOLE: return holeminer::PatternKind::Blackhole;
    case HM_PATTERN_VOLCANO: return holeminer::PatternKind::Volcano;
  }
  throw holeminer::ContractViolation("unknown pattern kind");
}

std::vector<holeminer::Algorithm> parse_algorithm_list(std::string_view list) {
  using holeminer::Algorithm;
  if (list == "all") return {Algorithm::BruteForce, Algorithm::IBlackhole, Algorithm::IBlackholeDC};
  std::vector<Algorithm> out;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto name = list.substr(0, comma);
    auto algo = holeminer::parse_algorithm(name);
    if (!algo) throw holeminer::ContractViolation("unknown algorithm '" + std::string(name) + "'");
    out.push_back(*algo);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw holeminer::ContractViolation("empty algorithm list");
  return out;
}

}  // namespace

extern "C" {

const char* hm_version(void) { return "0.1.0"; }

const char* hm_last_error(void) { return last_error.c_str(); }

void hm_string_free(char* s) { std::free(s); }

hm_status hm_default_guard_limit(uint64_t* out) {
  if (!out) return fail(HM_ERR_INVALID_HANDLE, "null out-parameter");
  const char* env = std::getenv("HOLEMINER_GUARD_LIMIT");
  if (!env || !*env) {
    *out = holeminer::kDefaultGuardLimit;
    return HM_OK;
  }
  std::string_view text(env);
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    return fail(HM_ERR_INVALID_ARGUMENT,
                "HOLEMINER_GUARD_LIMIT must be a positive integer, got '" + std::string(text) + "'");
  }
  *out = value;
  return HM_OK;
}

hm_status hm_mine_options_init(hm_mine_options* opts) {
  if (!opts) return fail(HM_ERR_INVALID_HANDLE, "null options");
  opts->max_size = 1;
  opts->algorithm = HM_ALGO_IBLACKHOLE_DC;
  opts->pattern = HM_PATTERN_BLACKHOLE;
  opts->parallel = 0;
  return hm_default_guard_limit(&opts->guard_limit);
}

hm_status hm_graph_load_file(const char* path, hm_graph** out) {
  if (!path || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    auto loaded = holeminer::load_edge_list_file(path);
    *out = new hm_graph{std::move(loaded.graph), loaded.report};
  });
}

hm_status hm_graph_load_text(const char* text, size_t len, hm_graph** out) {
  if ((!text && len) || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    auto loaded = holeminer::load_edge_list(std::string_view(text ? text : "", len));
    *out = new hm_graph{std::move(loaded.graph), loaded.report};
  });
}

void hm_graph_free(hm_graph* g) { delete g; }

hm_status hm_graph_counts(const hm_graph* g, size_t* nodes, size_t* edges) {
  if (!g) return fail(HM_ERR_INVALID_HANDLE, "null graph");
  if (nodes) *nodes = g->graph.node_count();
  if (edges) *edges = g->graph.edge_count();
  return HM_OK;
}

hm_status hm_graph_load_report(const hm_graph* g, size_t* self_loops_dropped,
                               size_t* duplicates_collapsed) {
  if (!g) return fail(HM_ERR_INVALID_HANDLE, "null graph");
  if (self_loops_dropped) *self_loops_dropped = g->load.self_loops_dropped;
  if (duplicates_collapsed) *duplicates_collapsed = g->load.duplicates_collapsed;
  return HM_OK;
}

hm_status hm_graph_stats(const hm_graph* g, hm_format format, char** out) {
  if (!g || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    *out = dup_string(
        holeminer::graph_stats_report(holeminer::graph_stats(g->graph), to_format(format)));
  });
}

hm_status hm_graph_write_edge_list(const hm_graph* g, char** out) {
  if (!g || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    std::ostringstream text;
    holeminer::write_edge_list(g->graph, text);
    *out = dup_string(text.str());
  });
}

hm_status hm_mine(const hm_graph* g, const hm_mine_options* opts, hm_result** out) {
  if (!g || !opts || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    holeminer::MiningConfig cfg;
    cfg.max_size = opts->max_size;
    cfg.algorithm = to_algorithm(opts->algorithm);
    cfg.kind = to_kind(opts->pattern);
    cfg.parallel = opts->parallel != 0;
    cfg.guard_limit = opts->guard_limit;
    auto result = holeminer::mine(g->graph, cfg);
    *out = new hm_result{g->graph, g->load, std::move(result)};
  });
}

void hm_result_free(hm_result* r) { delete r; }

hm_status hm_result_count(const hm_result* r, size_t size, size_t* count) {
  if (!r || !count) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  if (size < 1 || size > r->result.patterns.size()) {
    return fail(HM_ERR_INVALID_ARGUMENT, "size " + std::to_string(size) + " outside the mined range");
  }
  *count = r->result.of_size(size).size();
  return HM_OK;
}

hm_status hm_result_total_ms(const hm_result* r, double* ms) {
  if (!r || !ms) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  *ms = r->result.total_ms();
  return HM_OK;
}

hm_status hm_result_report(const hm_result* r, const char* command, hm_format format, char** out) {
  if (!r || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    holeminer::RunInfo info{command ? command : "", r->load};
    *out = dup_string(holeminer::detect_report(r->graph, r->result, info, to_format(format)));
  });
}

hm_status hm_result_patterns_json(const hm_result* r, char** out) {
  if (!r || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] { *out = dup_string(holeminer::pattern_payload(r->graph, r->result)); });
}

hm_status hm_prune_stats(const hm_graph* g, size_t size, hm_format format, char** out) {
  if (!g || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    *out = dup_string(
        holeminer::prune_stats_report(holeminer::prune_stats(g->graph, size), to_format(format)));
  });
}

hm_status hm_bench(const hm_graph* g, size_t max_size, const char* algorithms, size_t repeats,
                   uint64_t guard_limit, char** csv_out) {
  if (!g || !algorithms || !csv_out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    holeminer::BenchOptions opts;
    opts.max_size = max_size;
    opts.algorithms = parse_algorithm_list(algorithms);
    opts.repeats = repeats;
    opts.guard_limit = guard_limit;
    *csv_out = dup_string(holeminer::bench_csv(holeminer::run_bench(g->graph, opts)));
  });
}

hm_status hm_prices_load_file(const char* path, hm_prices** out) {
  if (!path || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] { *out = new hm_prices{holeminer::load_prices_file(path)}; });
}

hm_status hm_prices_load_text(const char* text, size_t len, hm_prices** out) {
  if ((!text && len) || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    std::istringstream in{std::string(text ? text : "", len)};
    *out = new hm_prices{holeminer::load_prices(in)};
  });
}

void hm_prices_free(hm_prices* p) { delete p; }

hm_status hm_prices_counts(const hm_prices* p, size_t* instruments, size_t* days,
                           size_t* rejected_rows) {
  if (!p) return fail(HM_ERR_INVALID_HANDLE, "null prices");
  if (instruments) *instruments = p->loaded.matrix.tickers.size();
  if (days) *days = p->loaded.matrix.days();
  if (rejected_rows) *rejected_rows = p->loaded.rejected.size();
  return HM_OK;
}

hm_status hm_prices_rejected(const hm_prices* p, char** out) {
  if (!p || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    std::ostringstream text;
    for (const auto& row : p->loaded.rejected) {
      text << "line " << row.line << " (" << row.ticker << "): " << row.reason << '\n';
    }
    *out = dup_string(text.str());
  });
}

hm_status hm_stock_graph(const hm_prices* p, double theta, size_t lag, int raw_prices,
                         hm_graph** out) {
  if (!p || !out) return fail(HM_ERR_INVALID_HANDLE, "null argument");
  return guarded([&] {
    holeminer::StockGraphOptions opts{theta, lag, raw_prices != 0};
    *out = new hm_graph{holeminer::build_stock_graph(p->loaded.matrix, opts), {}};
  });
}

}  // extern "C"
