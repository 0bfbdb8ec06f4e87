#pragma once

#include <stdexcept>
#include <string>

namespace eqanis {

/// Invalid configuration or argument; maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure (non-convergence, budget exhaustion); CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series did not meet the stop rule within the term cap.
class SeriesConvergenceError : public NumericalError {
 public:
  SeriesConvergenceError(const std::string& msg, double last_term_rel)
      : NumericalError(msg), last_term_relative(last_term_rel) {}
  /// Magnitude of the last evaluated term relative to the partial sum.
  double last_term_relative;
};

}  // namespace eqanis
