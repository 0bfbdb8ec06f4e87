#pragma once

#include <vector>

namespace eqanis {

/// One generalized Laguerre value carried in the log domain.
struct LogSigned {
  double log_abs;
  int sign;
};

/// log L_l^{(alpha)}(t) for l = 0..count-1 via the orthogonal-polynomial
/// three-term recurrence, carried in the log domain. For t <= 0 and
/// alpha > -1 every value is positive (sign always +1); positive t is out
/// of model range and rejected.
std::vector<LogSigned> laguerre_log_terms(double alpha, double t, int count);

}  // namespace eqanis
