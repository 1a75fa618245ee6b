#include "holeminer/stock_net.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>
#include <unordered_set>

#include "holeminer/errors.hpp"

namespace holeminer {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

// Empty string on success, otherwise the rejection reason.
std::string parse_price(std::string_view cell, std::size_t day, double& out) {
  if (cell.empty()) return "missing price on day " + std::to_string(day);
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(out)) {
    return "non-numeric price '" + std::string(cell) + "' on day " + std::to_string(day);
  }
  if (!(out > 0.0)) return "non-positive price on day " + std::to_string(day);
  return {};
}

template <class T>
std::optional<double> pearson_lagged(std::span<const T> x, std::span<const T> y, std::size_t k) {
  if (x.size() != y.size()) throw ContractViolation("lagged_correlation: length mismatch");
  if (k < 1 || k >= x.size()) {
    throw ContractViolation("lagged_correlation: lag " + std::to_string(k) +
                            " outside [1, " + std::to_string(x.size()) + ")");
  }
  const std::size_t n = x.size() - k;
  double mx = 0.0, my = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    mx += static_cast<double>(x[t]);
    my += static_cast<double>(y[t + k]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double dx = static_cast<double>(x[t]) - mx;
    const double dy = static_cast<double>(y[t + k]) - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

LoadedPrices load_prices(std::istream& in) {
  LoadedPrices out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t columns = 0;
  std::unordered_set<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (columns == 0) {
      columns = cells.size();
      if (columns < 3) throw ParseError("need at least 2 price columns in header", line_no);
      continue;
    }
    if (cells.size() != columns) {
      throw ParseError("ragged row: expected " + std::to_string(columns) + " cells, got " +
                           std::to_string(cells.size()),
                       line_no);
    }
    std::string ticker(cells[0]);
    if (ticker.empty()) throw ParseError("empty ticker", line_no);
    if (!seen.insert(ticker).second) throw ParseError("duplicate ticker '" + ticker + "'", line_no);

    std::vector<double> series(columns - 1);
    std::string reason;
    for (std::size_t d = 1; d < columns && reason.empty(); ++d) {
      reason = parse_price(cells[d], d, series[d - 1]);
    }
    if (!reason.empty()) {
      out.rejected.push_back({line_no, ticker, reason});
      continue;
    }
    out.matrix.tickers.push_back(std::move(ticker));
    out.matrix.prices.push_back(std::move(series));
  }
  if (columns == 0) throw ParseError("missing header row", 0);
  return out;
}

LoadedPrices load_prices_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return load_prices(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

MovementMatrix movements(const PriceMatrix& p) {
  MovementMatrix m;
  m.tickers = p.tickers;
  m.moves.reserve(p.prices.size());
  for (const auto& series : p.prices) {
    if (series.size() < 2) throw ContractViolation("movements: need at least 2 days");
    std::vector<std::uint8_t> b(series.size() - 1);
    for (std::size_t t = 0; t + 1 < series.size(); ++t) b[t] = series[t + 1] >= series[t] ? 1 : 0;
    m.moves.push_back(std::move(b));
  }
  return m;
}

std::optional<double> lagged_correlation(std::span<const double> x, std::span<const double> y,
                                         std::size_t k) {
  return pearson_lagged(x, y, k);
}

std::optional<double> lagged_correlation(std::span<const std::uint8_t> x,
                                         std::span<const std::uint8_t> y, std::size_t k) {
  return pearson_lagged(x, y, k);
}

DirectedGraph build_stock_graph(const PriceMatrix& p, const StockGraphOptions& opts) {
  const std::size_t n = p.tickers.size();
  if (n < 2 || p.prices.size() != n) throw ContractViolation("stock graph needs at least 2 instruments");
  const std::size_t days = p.days();
  for (const auto& s : p.prices) {
    if (s.size() != days) throw ContractViolation("price series have unequal lengths");
  }
  const std::size_t len = opts.raw_prices ? days : days - 1;
  if (opts.lag < 1 || opts.lag >= len) {
    throw ContractViolation("lag " + std::to_string(opts.lag) + " outside [1, " +
                            std::to_string(len) + ")");
  }

  MovementMatrix mv;
  if (!opts.raw_prices) mv = movements(p);
  auto rho = [&](std::size_t i, std::size_t j) {
    return opts.raw_prices ? lagged_correlation(p.prices[i], p.prices[j], opts.lag)
                           : lagged_correlation(mv.moves[i], mv.moves[j], opts.lag);
  };

  std::vector<Edge> edges;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      auto r = rho(i, j);
      if (r && *r > opts.theta) {
        edges.push_back({static_cast<NodeId>(j), static_cast<NodeId>(i), 1.0});
      }
    }
  }
  return DirectedGraph::from_edges(p.tickers, edges);
}

}  // namespace holeminer
