#include "eqanis/laguerre.hpp"

#include <cmath>

#include "eqanis/errors.hpp"

namespace eqanis {

std::vector<LogSigned> laguerre_log_terms(double alpha, double t, int count) {
  if (t > 0.0)
    throw ValidationError("laguerre: argument must be <= 0 (model range)");
  if (!(alpha > -1.0)) throw ValidationError("laguerre: order must be > -1");
  if (count < 1) throw ValidationError("laguerre: need at least one term");

  std::vector<LogSigned> out(count);
  out[0] = {0.0, 1};  // L_0 = 1
  if (count == 1) return out;
  out[1] = {std::log(1.0 + alpha - t), 1};

  // (l+1) L_{l+1} = (2l+1+alpha-t) L_l - (l+alpha) L_{l-1}. Both products
  // are positive and the subtrahend never exceeds half the minuend on
  // t <= 0, so log1p(-e^s) is well conditioned.
  for (int l = 1; l + 1 < count; ++l) {
    const double u = std::log(2.0 * l + 1.0 + alpha - t) + out[l].log_abs;
    const double v = std::log(l + alpha) + out[l - 1].log_abs;
    out[l + 1] = {u + std::log1p(-std::exp(v - u)) - std::log(l + 1.0), 1};
  }
  return out;
}

}  // namespace eqanis
