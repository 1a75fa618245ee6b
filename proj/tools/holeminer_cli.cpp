// holeminer command-line front end. Links only the C API.
//
// Exit codes: 0 success, 1 usage or input error, 2 guard-limit refusal,
// 3 algorithms disagreed (bench).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "holeminer/holeminer.h"

namespace {

struct GraphDeleter {
  void operator()(hm_graph* g) const { hm_graph_free(g); }
};
struct ResultDeleter {
  void operator()(hm_result* r) const { hm_result_free(r); }
};
struct PricesDeleter {
  void operator()(hm_prices* p) const { hm_prices_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { hm_string_free(s); }
};

using GraphPtr = std::unique_ptr<hm_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<hm_result, ResultDeleter>;
using PricesPtr = std::unique_ptr<hm_prices, PricesDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown out of a subcommand with the exit code to return.
struct Exit {
  int code;
};

int exit_code(hm_status s) {
  switch (s) {
    case HM_OK: return 0;
    case HM_ERR_GUARD: return 2;
    case HM_ERR_CORRECTNESS: return 3;
    default: return 1;
  }
}

void check(hm_status s) {
  if (s == HM_OK) return;
  std::cerr << "holeminer: " << hm_last_error() << '\n';
  throw Exit{exit_code(s)};
}

void write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "holeminer: cannot write '" << path << "'\n";
    throw Exit{1};
  }
}

GraphPtr load_graph(const std::string& path) {
  hm_graph* g = nullptr;
  check(hm_graph_load_file(path.c_str(), &g));
  GraphPtr owned(g);
  size_t loops = 0, dups = 0;
  check(hm_graph_load_report(g, &loops, &dups));
  if (loops) std::cerr << "holeminer: dropped " << loops << " self-loop line(s)\n";
  if (dups) std::cerr << "holeminer: collapsed " << dups << " duplicate edge line(s)\n";
  return owned;
}

hm_format format_of(const std::string& name) {
  return name == "csv" ? HM_FORMAT_CSV : HM_FORMAT_JSON;
}

uint64_t resolve_guard(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  uint64_t limit = 0;
  check(hm_default_guard_limit(&limit));
  return limit;
}

const std::map<std::string, hm_algorithm> kAlgorithms{
    {"brute", HM_ALGO_BRUTE_FORCE},
    {"iblackhole", HM_ALGO_IBLACKHOLE},
    {"iblackhole-dc", HM_ALGO_IBLACKHOLE_DC}};

const std::map<std::string, hm_pattern> kPatterns{{"blackhole", HM_PATTERN_BLACKHOLE},
                                                  {"volcano", HM_PATTERN_VOLCANO}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blackhole and volcano pattern mining for directed graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hm_version());

  std::string command;
  for (int a = 0; a < argc; ++a) command += (a ? " " : "") + std::string(argv[a]);

  // detect
  struct {
    std::string input, output, format = "json";
    size_t max_size = 0;
    hm_algorithm algorithm = HM_ALGO_IBLACKHOLE_DC;
    hm_pattern pattern = HM_PATTERN_BLACKHOLE;
    bool parallel = false;
    std::optional<uint64_t> guard;
  } detect;
  auto* detect_cmd = app.add_subcommand("detect", "Mine 1..N-node blackhole or volcano patterns");
  detect_cmd->add_option("--input", detect.input, "Edge-list file")->required();
  detect_cmd->add_option("--max-size", detect.max_size, "Largest pattern size N")
      ->required()
      ->check(CLI::PositiveNumber);
  detect_cmd->add_option("--algorithm", detect.algorithm, "brute | iblackhole | iblackhole-dc")
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case))
      ->default_str("iblackhole-dc");
  detect_cmd->add_option("--pattern", detect.pattern, "blackhole | volcano")
      ->transform(CLI::CheckedTransformer(kPatterns, CLI::ignore_case))
      ->default_str("blackhole");
  detect_cmd->add_option("--output", detect.output, "Report file (stdout when omitted)");
  detect_cmd->add_option("--format", detect.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  detect_cmd->add_flag("--parallel", detect.parallel, "Search components concurrently");
  detect_cmd->add_option("--guard-limit", detect.guard,
                         "Refuse searches above this many candidate sets "
                         "(default 1e9 or $HOLEMINER_GUARD_LIMIT)")
      ->check(CLI::PositiveNumber);

  // prune-stats
  struct {
    std::string input, output, format = "json";
    size_t size = 0;
  } prune;
  auto* prune_cmd = app.add_subcommand("prune-stats", "Pruning funnel for one pattern size");
  prune_cmd->add_option("--input", prune.input, "Edge-list file")->required();
  prune_cmd->add_option("--size", prune.size, "Pattern size I")->required()->check(CLI::PositiveNumber);
  prune_cmd->add_option("--format", prune.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  prune_cmd->add_option("--output", prune.output, "Output file (stdout when omitted)");

  // stock-graph
  struct {
    std::string prices, output;
    double theta = 0.35;
    size_t lag = 1;
    bool raw = false;
  } stock;
  auto* stock_cmd =
      app.add_subcommand("stock-graph", "Build a lagged-correlation network from closing prices");
  stock_cmd->add_option("--prices", stock.prices, "CSV: ticker,d1,...,dT")->required();
  stock_cmd->add_option("--theta", stock.theta, "Correlation threshold")->capture_default_str();
  stock_cmd->add_option("--lag", stock.lag, "Lag in days")->capture_default_str()->check(CLI::PositiveNumber);
  stock_cmd->add_option("--output", stock.output, "Edge-list file (stdout when omitted)");
  stock_cmd->add_flag("--raw-prices", stock.raw, "Correlate prices instead of up/down moves");

  // bench
  struct {
    std::string input, output, algorithms = "all";
    size_t max_size = 0;
    size_t repeats = 3;
    std::optional<uint64_t> guard;
  } bench;
  auto* bench_cmd = app.add_subcommand("bench", "Median wall time per algorithm and size");
  bench_cmd->add_option("--input", bench.input, "Edge-list file")->required();
  bench_cmd->add_option("--max-size", bench.max_size, "Largest pattern size N")
      ->required()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "Comma-separated subset of brute,iblackhole,iblackhole-dc, or all")
      ->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per cell")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--output", bench.output, "CSV file (stdout when omitted)");
  bench_cmd->add_option("--guard-limit", bench.guard, "Guard limit per run")->check(CLI::PositiveNumber);

  // stats
  struct {
    std::string input, output, format = "json";
  } stats;
  auto* stats_cmd = app.add_subcommand("stats", "Node, edge and component counts");
  stats_cmd->add_option("--input", stats.input, "Edge-list file")->required();
  stats_cmd->add_option("--format", stats.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  stats_cmd->add_option("--output", stats.output, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*detect_cmd) {
      GraphPtr g = load_graph(detect.input);
      hm_mine_options opts;
      check(hm_mine_options_init(&opts));
      opts.max_size = detect.max_size;
      opts.algorithm = detect.algorithm;
      opts.pattern = detect.pattern;
      opts.parallel = detect.parallel ? 1 : 0;
      opts.guard_limit = resolve_guard(detect.guard);
      hm_result* raw = nullptr;
      check(hm_mine(g.get(), &opts, &raw));
      ResultPtr result(raw);
      for (size_t i = 1; i <= detect.max_size; ++i) {
        size_t n = 0;
        check(hm_result_count(result.get(), i, &n));
        std::cerr << "size " << i << ": " << n << " pattern(s)\n";
      }
      char* text = nullptr;
      check(hm_result_report(result.get(), command.c_str(), format_of(detect.format), &text));
      write_output(detect.output, StringPtr(text).get());
    } else if (*prune_cmd) {
      GraphPtr g = load_graph(prune.input);
      char* text = nullptr;
      check(hm_prune_stats(g.get(), prune.size, format_of(prune.format), &text));
      write_output(prune.output, StringPtr(text).get());
    } else if (*stock_cmd) {
      hm_prices* raw = nullptr;
      check(hm_prices_load_file(stock.prices.c_str(), &raw));
      PricesPtr prices(raw);
      size_t rejected = 0;
      check(hm_prices_counts(prices.get(), nullptr, nullptr, &rejected));
      if (rejected) {
        char* report = nullptr;
        check(hm_prices_rejected(prices.get(), &report));
        std::cerr << "holeminer: excluded " << rejected << " row(s)\n" << StringPtr(report).get();
      }
      hm_graph* g = nullptr;
      check(hm_stock_graph(prices.get(), stock.theta, stock.lag, stock.raw ? 1 : 0, &g));
      GraphPtr graph(g);
      char* text = nullptr;
      check(hm_graph_write_edge_list(graph.get(), &text));
      write_output(stock.output, StringPtr(text).get());
    } else if (*bench_cmd) {
      GraphPtr g = load_graph(bench.input);
      char* text = nullptr;
      check(hm_bench(g.get(), bench.max_size, bench.algorithms.c_str(), bench.repeats,
                     resolve_guard(bench.guard), &text));
      write_output(bench.output, StringPtr(text).get());
    } else if (*stats_cmd) {
      GraphPtr g = load_graph(stats.input);
      char* text = nullptr;
      check(hm_graph_stats(g.get(), format_of(stats.format), &text));
      write_output(stats.output, StringPtr(text).get());
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
