#include "holeminer/stock_net.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "holeminer/errors.hpp"

namespace holeminer {
namespace {

LoadedPrices parse(const std::string& text) {
  std::istringstream in(text);
  return load_prices(in);
}

// Textbook two-pass Pearson correlation of x[0..n-k) with y[k..n).
double pearson(const std::vector<double>& x, const std::vector<double>& y, std::size_t k) {
  const std::size_t n = x.size() - k;
  double mx = 0, my = 0;
  for (std::size_t t = 0; t < n; ++t) mx += x[t], my += y[t + k];
  mx /= n;
  my /= n;
  double num = 0, vx = 0, vy = 0;
  for (std::size_t t = 0; t < n; ++t) {
    num += (x[t] - mx) * (y[t + k] - my);
    vx += (x[t] - mx) * (x[t] - mx);
    vy += (y[t + k] - my) * (y[t + k] - my);
  }
  return num / std::sqrt(vx * vy);
}

// Price path whose day-over-day moves are exactly `ups`.
std::vector<double> path(const std::vector<bool>& ups) {
  std::vector<double> p{100.0};
  for (bool up : ups) p.push_back(p.back() * (up ? 1.02 : 0.98));
  return p;
}

std::vector<bool> coin_flips(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = coin(rng);
  return out;
}

TEST(Movements, UpOrFlatIsOne) {
  PriceMatrix p{{"A"}, {{10, 11, 11, 9}}};
  auto m = movements(p);
  EXPECT_EQ(m.moves[0], (std::vector<std::uint8_t>{1, 1, 0}));
  EXPECT_EQ(m.tickers, p.tickers);
}

TEST(LaggedCorrelation, DelayedCopyIsPerfect) {
  std::vector<double> x{1, 0, 1, 1, 0, 0, 1, 0};
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t t = 0; t + 1 < x.size(); ++t) y[t + 1] = x[t];
  EXPECT_NEAR(*lagged_correlation(x, y, 1), 1.0, 1e-12);
  // Delayed negation is perfectly anti-correlated.
  for (std::size_t t = 0; t + 1 < x.size(); ++t) y[t + 1] = 1 - x[t];
  EXPECT_NEAR(*lagged_correlation(x, y, 1), -1.0, 1e-12);
}

TEST(LaggedCorrelation, MatchesDirectFormula) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise;
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> x(50), y(50);
    for (auto& v : x) v = noise(rng);
    for (auto& v : y) v = noise(rng);
    for (std::size_t k : {1u, 2u, 7u}) {
      EXPECT_NEAR(*lagged_correlation(x, y, k), pearson(x, y, k), 1e-12);
    }
  }
}

TEST(LaggedCorrelation, BinaryOverloadAgrees) {
  std::vector<std::uint8_t> a{1, 0, 0, 1, 1, 0, 1, 1, 0, 0};
  std::vector<std::uint8_t> b{0, 1, 1, 0, 1, 0, 0, 1, 1, 1};
  std::vector<double> da(a.begin(), a.end()), db(b.begin(), b.end());
  EXPECT_NEAR(*lagged_correlation(a, b, 2), *lagged_correlation(da, db, 2), 1e-15);
}

TEST(LaggedCorrelation, DegenerateInputs) {
  std::vector<double> flat{3, 3, 3, 3}, x{1, 2, 3, 5};
  EXPECT_FALSE(lagged_correlation(flat, x, 1));
  EXPECT_FALSE(lagged_correlation(x, flat, 1));
  EXPECT_THROW(lagged_correlation(x, x, 0), ContractViolation);
  EXPECT_THROW(lagged_correlation(x, x, 4), ContractViolation);
  std::vector<double> shorter{1, 2, 3};
  EXPECT_THROW(lagged_correlation(x, shorter, 1), ContractViolation);
}

TEST(LoadPrices, ParsesAndRejectsRows) {
  auto r = parse(
      "ticker,d1,d2,d3\n"
      "AAA,10,11,12\n"
      "BBB,5,,6\n"
      "CCC,1,x,2\n"
      "DDD,1,0,2\r\n"
      "EEE, 7 ,8,9\n");
  EXPECT_EQ(r.matrix.tickers, (std::vector<std::string>{"AAA", "EEE"}));
  EXPECT_EQ(r.matrix.days(), 3u);
  EXPECT_EQ(r.matrix.prices[1], (std::vector<double>{7, 8, 9}));
  ASSERT_EQ(r.rejected.size(), 3u);
  EXPECT_EQ(r.rejected[0].ticker, "BBB");
  EXPECT_EQ(r.rejected[0].line, 3u);
  EXPECT_NE(r.rejected[1].reason.find("non-numeric"), std::string::npos);
  EXPECT_NE(r.rejected[2].reason.find("non-positive"), std::string::npos);
}

TEST(LoadPrices, StructuralErrors) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("ticker,d1\nA,1\n"), ParseError);
  EXPECT_THROW(parse("ticker,d1,d2\nA,1,2,3\n"), ParseError);
  EXPECT_THROW(parse("ticker,d1,d2\nA,1,2\nA,3,4\n"), ParseError);
  EXPECT_THROW(parse("ticker,d1,d2\n,1,2\n"), ParseError);
  try {
    parse("ticker,d1,d2\nA,1,2\nB,1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(load_prices_file("/nonexistent/prices.csv"), ParseError);
}

TEST(StockGraph, FollowerPointsAtLeader) {
  auto lead = coin_flips(120, 1);
  std::vector<bool> follow(120);
  follow[0] = true;
  for (std::size_t t = 1; t < 120; ++t) follow[t] = lead[t - 1];
  PriceMatrix p{{"LEAD", "FOLLOW"}, {path(lead), path(follow)}};
  auto g = build_stock_graph(p);
  const NodeId L = g.find("LEAD"), F = g.find("FOLLOW");
  ASSERT_EQ(g.edge_count(), 1u);
  ASSERT_EQ(g.successors(F).size(), 1u);
  EXPECT_EQ(g.successors(F)[0].node, L);
  EXPECT_EQ(g.successors(F)[0].weight, 1.0);
}

TEST(StockGraph, MutualFollowersGiveBothEdges) {
  // Alternating moves: each series is the other one delayed by one day.
  std::vector<bool> a, b;
  for (int t = 0; t < 40; ++t) {
    a.push_back(t % 2 == 0);
    b.push_back(t % 2 == 1);
  }
  PriceMatrix p{{"A", "B"}, {path(a), path(b)}};
  auto g = build_stock_graph(p);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(StockGraph, ThresholdMonotone) {
  PriceMatrix p;
  for (int i = 0; i < 8; ++i) {
    p.tickers.push_back("S" + std::to_string(i));
    p.prices.push_back(path(coin_flips(60, 100 + i)));
  }
  std::size_t prev = SIZE_MAX;
  for (double theta : {-1.0, -0.2, 0.0, 0.1, 0.2, 0.35, 0.6, 1.0}) {
    auto g = build_stock_graph(p, {theta, 1, false});
    EXPECT_LE(g.edge_count(), prev) << theta;
    prev = g.edge_count();
  }
  EXPECT_EQ(build_stock_graph(p, {1.01, 1, false}).edge_count(), 0u);
  EXPECT_EQ(build_stock_graph(p, {1.0, 1, false}).edge_count(), 0u);
}

TEST(StockGraph, ConstantPricesHaveNoEdges) {
  PriceMatrix p{{"A", "B", "C"}, {{5, 5, 5, 5}, {1, 2, 1, 3}, {4, 3, 5, 1}}};
  auto g = build_stock_graph(p, {-2.0, 1, false});
  // A never moves down, so its movement vector is constant and unusable.
  for (const Edge& e : g.edges()) {
    EXPECT_NE(e.src, g.find("A"));
    EXPECT_NE(e.dst, g.find("A"));
  }
  EXPECT_EQ(g.node_count(), 3u);
}

TEST(StockGraph, RawPriceMode) {
  std::vector<double> x{1, 4, 2, 8, 5, 7}, y{9, 1, 4, 2, 8, 5};
  PriceMatrix p{{"X", "Y"}, {x, y}};
  auto g = build_stock_graph(p, {0.9, 1, true});
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].src, g.find("Y"));
  EXPECT_EQ(g.edges()[0].dst, g.find("X"));
}

TEST(StockGraph, ContractErrors) {
  PriceMatrix one{{"A"}, {{1, 2, 3}}};
  EXPECT_THROW(build_stock_graph(one), ContractViolation);
  PriceMatrix ragged{{"A", "B"}, {{1, 2, 3}, {1, 2}}};
  EXPECT_THROW(build_stock_graph(ragged), ContractViolation);
  PriceMatrix p{{"A", "B"}, {{1, 2, 3}, {3, 2, 1}}};
  EXPECT_THROW(build_stock_graph(p, {0.35, 2, false}), ContractViolation);
  EXPECT_THROW(build_stock_graph(p, {0.35, 0, false}), ContractViolation);
}

}  // namespace
}  // namespace holeminer
