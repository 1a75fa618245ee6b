#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holeminer/graph.hpp"

namespace holeminer {

// Daily closing prices, one equal-length series per instrument.
struct PriceMatrix {
  std::vector<std::string> tickers;
  std::vector<std::vector<double>> prices;

  std::size_t days() const { return prices.empty() ? 0 : prices.front().size(); }
};

// moves[i][t] == 1 iff instrument i closed day t+1 at or above day t.
struct MovementMatrix {
  std::vector<std::string> tickers;
  std::vector<std::vector<std::uint8_t>> moves;
};

struct RejectedRow {
  std::size_t line = 0;
  std::string ticker;
  std::string reason;
};

struct LoadedPrices {
  PriceMatrix matrix;
  std::vector<RejectedRow> rejected;
};

// CSV with header `ticker,d1,...,dT` and one row per instrument. Rows with an
// empty, non-numeric or non-positive price are excluded and reported. Ragged
// rows, duplicate tickers and T < 2 are errors.
LoadedPrices load_prices(std::istream& in);
LoadedPrices load_prices_file(const std::string& path);

MovementMatrix movements(const PriceMatrix& p);

// Pearson correlation of x[0 .. L-k) against y[k .. L): y is delayed by k
// relative to x. Empty when either slice has zero variance.
std::optional<double> lagged_correlation(std::span<const double> x, std::span<const double> y,
                                         std::size_t k);
std::optional<double> lagged_correlation(std::span<const std::uint8_t> x,
                                         std::span<const std::uint8_t> y, std::size_t k);

struct StockGraphOptions {
  double theta = 0.35;
  std::size_t lag = 1;
  // Correlate the price series themselves instead of movement vectors.
  bool raw_prices = false;
};

// One node per instrument, edge j -> i (weight 1) when
// lagged_correlation(series_i, series_j, lag) > theta, i.e. j follows i.
DirectedGraph build_stock_graph(const PriceMatrix& p, const StockGraphOptions& opts = {});

}  // namespace holeminer
