#include "eqanis/sphharm.hpp"

#include <cmath>

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"

namespace eqanis {

RealSphericalHarmonics::RealSphericalHarmonics(int l_max) : l_max_(l_max) {
  if (l_max < 0) throw ValidationError("sphharm: degree must be >= 0");
  const int np = (l_max + 1) * (l_max + 2) / 2;
  a_.assign(np, 0.0);
  b_.assign(np, 0.0);
  for (int l = 2; l <= l_max; ++l) {
    for (int m = 0; m <= l - 2; ++m) {
      const int i = packed_index(l, m);
      const double l2 = static_cast<double>(l) * l;
      a_[i] = std::sqrt((4.0 * l2 - 1.0) / (l2 - m * m));
      b_[i] = std::sqrt(((2.0 * l + 1.0) * ((l - 1.0) * (l - 1.0) - m * m)) /
                        ((2.0 * l - 3.0) * (l2 - m * m)));
    }
  }
}

void RealSphericalHarmonics::legendre_parts(double x, std::vector<double>& p,
                                            std::vector<double>& dp) const {
  const int np = (l_max_ + 1) * (l_max_ + 2) / 2;
  p.assign(np, 0.0);
  dp.assign(np, 0.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));

  // normalized P_mm along the diagonal, then up in l
  p[packed_index(0, 0)] = 1.0 / std::sqrt(4.0 * pi);
  for (int m = 1; m <= l_max_; ++m)
    p[packed_index(m, m)] =
        p[packed_index(m - 1, m - 1)] * s * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
  for (int m = 0; m < l_max_; ++m)
    p[packed_index(m + 1, m)] = p[packed_index(m, m)] * x * std::sqrt(2.0 * m + 3.0);
  for (int l = 2; l <= l_max_; ++l)
    for (int m = 0; m <= l - 2; ++m) {
      const int i = packed_index(l, m);
      p[i] = a_[i] * x * p[packed_index(l - 1, m)] - b_[i] * p[packed_index(l - 2, m)];
    }

  // d p_lm / d theta = (l x p_lm - sqrt((2l+1)/(2l-1) (l^2-m^2)) p_{l-1,m}) / s;
  // only consumed at interior quadrature nodes where s is bounded away from 0.
  if (s > 0.0) {
    for (int l = 1; l <= l_max_; ++l)
      for (int m = 0; m <= l; ++m) {
        const double below = m <= l - 1 ? p[packed_index(l - 1, m)] : 0.0;
        const double f =
            std::sqrt((2.0 * l + 1.0) / (2.0 * l - 1.0) *
                      (static_cast<double>(l) * l - static_cast<double>(m) * m));
        dp[packed_index(l, m)] = (l * x * p[packed_index(l, m)] - f * below) / s;
      }
  }

  // fold in the sqrt(2) of the real basis for m > 0
  const double r2 = std::sqrt(2.0);
  for (int l = 1; l <= l_max_; ++l)
    for (int m = 1; m <= l; ++m) {
      p[packed_index(l, m)] *= r2;
      dp[packed_index(l, m)] *= r2;
    }
}

void RealSphericalHarmonics::values(double x, double phi,
                                    std::vector<double>& out) const {
  std::vector<double> p, dp;
  legendre_parts(x, p, dp);
  out.assign(size(), 0.0);
  for (int l = 0; l <= l_max_; ++l) {
    out[index(l, 0)] = p[packed_index(l, 0)];
    for (int m = 1; m <= l; ++m) {
      out[index(l, m)] = p[packed_index(l, m)] * std::cos(m * phi);
      out[index(l, -m)] = p[packed_index(l, m)] * std::sin(m * phi);
    }
  }
}

}  // namespace eqanis
