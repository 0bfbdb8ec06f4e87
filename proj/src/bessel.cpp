#include "eqanis/bessel.hpp"

#include <algorithm>
#include <cmath>

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"

namespace eqanis {

namespace {

// log(B_{1/2}(a)) = log( sqrt(2/pi) * (1 - e^{-2a}) / (2a) ), finite for all
// a >= 0; the a -> 0 limit is sqrt(2/pi).
double log_b_half(double a) {
  const double log_s2pi = 0.5 * std::log(2.0 / pi);
  if (a < 1e-4) {
    // (1 - e^{-2a})/(2a) = 1 - a + (2/3)a^2 - (1/3)a^3 + O(a^4)
    const double r = 1.0 - a + (2.0 / 3.0) * a * a - (1.0 / 3.0) * a * a * a;
    return log_s2pi + std::log(r);
  }
  return log_s2pi + std::log(-std::expm1(-2.0 * a)) - std::log(2.0 * a);
}

// log(x + y) given lx = log x, ly = log y with x, y > 0.
double log_add(double lx, double ly) {
  if (lx == -std::numeric_limits<double>::infinity()) return ly;
  if (ly == -std::numeric_limits<double>::infinity()) return lx;
  const double m = std::max(lx, ly);
  return m + std::log1p(std::exp(std::min(lx, ly) - m));
}

}  // namespace

std::vector<double> log_scaled_bessel_half_orders(double a, int n_orders) {
  if (!(a >= 0.0)) throw ValidationError("bessel: argument must be >= 0");
  if (n_orders < 1 || n_orders > bessel_order_cap)
    throw ValidationError("bessel: order count outside [1, 257]");

  std::vector<double> lp(n_orders);

  if (a == 0.0) {
    // B_{nu-1} = 2 nu B_nu exactly; B_{1/2}(0) = sqrt(2/pi).
    lp[0] = 0.5 * std::log(2.0 / pi);
    for (int k = 1; k < n_orders; ++k)
      lp[k] = lp[k - 1] - std::log(2.0 * (k + 0.5));
    return lp;
  }

  // Start high enough that seed contamination decays below double precision
  // before reaching the requested orders.
  const int start = std::max(n_orders, static_cast<int>(std::ceil(a))) + 30;
  const double log_a2 = 2.0 * std::log(a);

  double lp_hi = -std::numeric_limits<double>::infinity();  // log B at index j+1
  double lp_lo = 0.0;                                       // log B at index j
  for (int j = start; j >= 1; --j) {
    const double nu = j + 0.5;
    const double next = log_add(std::log(2.0 * nu) + lp_lo, log_a2 + lp_hi);
    lp_hi = lp_lo;
    lp_lo = next;
    if (j - 1 < n_orders) lp[j - 1] = next;
  }

  const double shift = log_b_half(a) - lp[0];
  for (double& v : lp) v += shift;
  return lp;
}

std::vector<double> scaled_bessel_half_orders(double a, int n_orders) {
  auto lp = log_scaled_bessel_half_orders(a, n_orders);
  for (double& v : lp) v = std::exp(v);
  return lp;
}

}  // namespace eqanis
