#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace holeminer {

// Malformed input text (edge lists, price CSVs). `line()` is 1-based, 0 when
// the error is not tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A caller broke an operation's precondition (empty set, cap < 1, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Node id outside [0, node_count).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Refusal to enumerate a search space larger than the configured limit.
class GuardLimitExceeded : public std::runtime_error {
 public:
  GuardLimitExceeded(double predicted, std::uint64_t limit)
      : std::runtime_error("search space too large: " + describe(predicted) +
                           " candidate sets exceed guard limit " + std::to_string(limit)),
        predicted_(predicted),
        limit_(limit) {}

  double predicted() const noexcept { return predicted_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  static std::string describe(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

  double predicted_;
  std::uint64_t limit_;
};

// Two mining algorithms disagreed on the same input.
class CorrectnessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace holeminer
