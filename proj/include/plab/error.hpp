#pragma once

#include <stdexcept>
#include <string>

namespace plab {

/// Bad input to an operation: inadmissible prime, malformed grid, bad order.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rounding or truncation step could not be certified at the requested
/// precision. Callers should retry with more digits or a deeper truncation.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same quantity disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A ratio whose denominator vanishes.
class UndefinedRatio : public std::domain_error {
 public:
  explicit UndefinedRatio(long long index)
      : std::domain_error("ratio undefined at n=" + std::to_string(index)), index_(index) {}
  long long index() const noexcept { return index_; }

 private:
  long long index_;
};

/// Requested work exceeds the configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace plab
