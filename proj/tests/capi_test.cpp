// Exercises the shared library strictly through its C header.

#include "holeminer/holeminer.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hm_string_free(s);
  return out;
}

hm_graph* load(const char* text) {
  hm_graph* g = nullptr;
  EXPECT_EQ(hm_graph_load_text(text, std::strlen(text), &g), HM_OK) << hm_last_error();
  return g;
}

TEST(CApi, VersionAndDefaults) {
  EXPECT_STREQ(hm_version(), "0.1.0");
  hm_mine_options o;
  ASSERT_EQ(hm_mine_options_init(&o), HM_OK);
  EXPECT_EQ(o.max_size, 1u);
  EXPECT_EQ(o.algorithm, HM_ALGO_IBLACKHOLE_DC);
  EXPECT_EQ(o.pattern, HM_PATTERN_BLACKHOLE);
  EXPECT_EQ(o.parallel, 0);
  EXPECT_EQ(hm_mine_options_init(nullptr), HM_ERR_INVALID_HANDLE);
}

TEST(CApi, GuardLimitFromEnvironment) {
  uint64_t limit = 0;
  ::unsetenv("HOLEMINER_GUARD_LIMIT");
  ASSERT_EQ(hm_default_guard_limit(&limit), HM_OK);
  EXPECT_EQ(limit, 1000000000u);
  ::setenv("HOLEMINER_GUARD_LIMIT", "1234", 1);
  ASSERT_EQ(hm_default_guard_limit(&limit), HM_OK);
  EXPECT_EQ(limit, 1234u);
  ::setenv("HOLEMINER_GUARD_LIMIT", "lots", 1);
  EXPECT_EQ(hm_default_guard_limit(&limit), HM_ERR_INVALID_ARGUMENT);
  ::unsetenv("HOLEMINER_GUARD_LIMIT");
}

TEST(CApi, GraphLifecycle) {
  hm_graph* g = load("a b\nb c\nb c\nc c\n");
  ASSERT_NE(g, nullptr);
  size_t nodes = 0, edges = 0, loops = 0, dups = 0;
  ASSERT_EQ(hm_graph_counts(g, &nodes, &edges), HM_OK);
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(edges, 2u);
  ASSERT_EQ(hm_graph_load_report(g, &loops, &dups), HM_OK);
  EXPECT_EQ(loops, 1u);
  EXPECT_EQ(dups, 1u);

  char* text = nullptr;
  ASSERT_EQ(hm_graph_write_edge_list(g, &text), HM_OK);
  std::string edge_list = take(text);
  hm_graph* again = load(edge_list.c_str());
  ASSERT_EQ(hm_graph_counts(again, &nodes, &edges), HM_OK);
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(edges, 2u);

  ASSERT_EQ(hm_graph_stats(g, HM_FORMAT_JSON, &text), HM_OK);
  EXPECT_NE(take(text).find("\"components\": 1"), std::string::npos);
  hm_graph_free(again);
  hm_graph_free(g);
  hm_graph_free(nullptr);
}

TEST(CApi, LoadErrors) {
  hm_graph* g = nullptr;
  const char* bad = "a b 0\n";
  EXPECT_EQ(hm_graph_load_text(bad, std::strlen(bad), &g), HM_ERR_INPUT);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(hm_last_error()).find("line 1"), std::string::npos);
  EXPECT_EQ(hm_graph_load_file("/nonexistent/graph.txt", &g), HM_ERR_INPUT);
  EXPECT_EQ(hm_graph_load_text(nullptr, 4, &g), HM_ERR_INVALID_HANDLE);
  EXPECT_EQ(hm_graph_load_text("a b\n", 4, nullptr), HM_ERR_INVALID_HANDLE);
  // No text at all is an empty graph.
  ASSERT_EQ(hm_graph_load_text(nullptr, 0, &g), HM_OK);
  size_t nodes = 1, edges = 1;
  hm_graph_counts(g, &nodes, &edges);
  EXPECT_EQ(nodes + edges, 0u);
  hm_graph_free(g);
  EXPECT_EQ(hm_graph_counts(nullptr, nullptr, nullptr), HM_ERR_INVALID_HANDLE);
}

TEST(CApi, MineAndReport) {
  hm_graph* g = load("a b\nb c\nx y\ny x\n");
  hm_mine_options o;
  hm_mine_options_init(&o);
  o.max_size = 3;
  hm_result* r = nullptr;
  ASSERT_EQ(hm_mine(g, &o, &r), HM_OK) << hm_last_error();
  size_t n = 0;
  ASSERT_EQ(hm_result_count(r, 2, &n), HM_OK);
  EXPECT_EQ(n, 2u);
  EXPECT_EQ(hm_result_count(r, 4, &n), HM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hm_result_count(r, 0, &n), HM_ERR_INVALID_ARGUMENT);
  double ms = -1;
  ASSERT_EQ(hm_result_total_ms(r, &ms), HM_OK);
  EXPECT_GE(ms, 0.0);

  char* text = nullptr;
  ASSERT_EQ(hm_result_patterns_json(r, &text), HM_OK);
  const std::string payload = take(text);
  ASSERT_EQ(hm_result_report(r, "cmd", HM_FORMAT_JSON, &text), HM_OK);
  EXPECT_NE(take(text).find("\"command\": \"cmd\""), std::string::npos);
  ASSERT_EQ(hm_result_report(r, "cmd", HM_FORMAT_CSV, &text), HM_OK);
  EXPECT_EQ(take(text), "size,members\n1,c\n2,b c\n2,x y\n3,a b c\n");

  // Same patterns from every algorithm, sequential or parallel.
  for (hm_algorithm a : {HM_ALGO_BRUTE_FORCE, HM_ALGO_IBLACKHOLE, HM_ALGO_IBLACKHOLE_DC}) {
    o.algorithm = a;
    o.parallel = 1;
    hm_result* other = nullptr;
    ASSERT_EQ(hm_mine(g, &o, &other), HM_OK);
    ASSERT_EQ(hm_result_patterns_json(other, &text), HM_OK);
    EXPECT_EQ(take(text), payload);
    hm_result_free(other);
  }
  hm_result_free(r);
  hm_graph_free(g);
}

TEST(CApi, MineErrors) {
  hm_graph* g = load("a b\nb c\n");
  hm_mine_options o;
  hm_mine_options_init(&o);
  hm_result* r = nullptr;
  o.max_size = 0;
  EXPECT_EQ(hm_mine(g, &o, &r), HM_ERR_INVALID_ARGUMENT);
  o.max_size = 3;
  o.algorithm = static_cast<hm_algorithm>(9);
  EXPECT_EQ(hm_mine(g, &o, &r), HM_ERR_INVALID_ARGUMENT);
  o.algorithm = HM_ALGO_BRUTE_FORCE;
  o.guard_limit = 2;
  EXPECT_EQ(hm_mine(g, &o, &r), HM_ERR_GUARD);
  EXPECT_NE(std::string(hm_last_error()).find("search space too large"), std::string::npos);
  EXPECT_EQ(r, nullptr);
  EXPECT_EQ(hm_mine(nullptr, &o, &r), HM_ERR_INVALID_HANDLE);
  hm_graph_free(g);
}

TEST(CApi, VolcanoOption) {
  hm_graph* g = load("a b\nb c\n");
  hm_mine_options o;
  hm_mine_options_init(&o);
  o.max_size = 2;
  o.pattern = HM_PATTERN_VOLCANO;
  hm_result* r = nullptr;
  ASSERT_EQ(hm_mine(g, &o, &r), HM_OK);
  char* text = nullptr;
  ASSERT_EQ(hm_result_report(r, "", HM_FORMAT_CSV, &text), HM_OK);
  EXPECT_EQ(take(text), "size,members\n1,a\n2,a b\n");
  hm_result_free(r);
  hm_graph_free(g);
}

TEST(CApi, PruneStatsAndBench) {
  hm_graph* g = load("a b\nb c\n");
  char* text = nullptr;
  ASSERT_EQ(hm_prune_stats(g, 2, HM_FORMAT_CSV, &text), HM_OK);
  EXPECT_EQ(take(text),
            "size,potential,candidate,final,final_nodes,final_edges,final_components,emitted\n"
            "2,3,3,1,1,0,1,1\n");
  EXPECT_EQ(hm_prune_stats(g, 0, HM_FORMAT_CSV, &text), HM_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(hm_bench(g, 2, "brute,iblackhole-dc", 1, 1000, &text), HM_OK) << hm_last_error();
  std::string csv = take(text);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(hm_bench(g, 2, "brute,quantum", 1, 1000, &text), HM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hm_bench(g, 2, "all", 0, 1000, &text), HM_ERR_INVALID_ARGUMENT);
  hm_graph_free(g);
}

TEST(CApi, Prices) {
  const char* csv =
      "ticker,d1,d2,d3,d4,d5,d6\n"
      "A,1,2,1,2,1,2\n"
      "B,2,1,2,1,2,1\n"
      "C,1,,1,1,1,1\n";
  hm_prices* p = nullptr;
  ASSERT_EQ(hm_prices_load_text(csv, std::strlen(csv), &p), HM_OK) << hm_last_error();
  size_t instruments = 0, days = 0, rejected = 0;
  ASSERT_EQ(hm_prices_counts(p, &instruments, &days, &rejected), HM_OK);
  EXPECT_EQ(instruments, 2u);
  EXPECT_EQ(days, 6u);
  EXPECT_EQ(rejected, 1u);
  char* text = nullptr;
  ASSERT_EQ(hm_prices_rejected(p, &text), HM_OK);
  EXPECT_NE(take(text).find("line 4 (C)"), std::string::npos);

  hm_graph* g = nullptr;
  ASSERT_EQ(hm_stock_graph(p, 0.35, 1, 0, &g), HM_OK) << hm_last_error();
  size_t nodes = 0, edges = 0;
  hm_graph_counts(g, &nodes, &edges);
  EXPECT_EQ(nodes, 2u);
  EXPECT_EQ(edges, 2u);
  hm_graph_free(g);
  EXPECT_EQ(hm_stock_graph(p, 0.35, 5, 0, &g), HM_ERR_INVALID_ARGUMENT);
  hm_prices_free(p);

  const char* ragged = "ticker,d1,d2\nA,1\n";
  EXPECT_EQ(hm_prices_load_text(ragged, std::strlen(ragged), &p), HM_ERR_INPUT);
}

}  // namespace
