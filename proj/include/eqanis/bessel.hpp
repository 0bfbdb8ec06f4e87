#pragma once

#include <vector>

namespace eqanis {

/// Maximum number of half-integer orders (nu = 1/2 ... cap - 1/2).
inline constexpr int bessel_order_cap = 257;

/// Logarithms of the scaled ratios B_nu(a) = I_nu(a)/a^nu * exp(-a) for
/// nu = k + 1/2, k = 0..n_orders-1, a >= 0.
///
/// Upward recurrence is unstable for I_nu, so the ratios are generated by
/// downward (Miller-type) recurrence B_{nu-1} = 2 nu B_nu + a^2 B_{nu+1},
/// seeded well above max(n_orders, a) and normalized against the closed form
/// at nu = 1/2. The recurrence is carried in the log domain, which keeps
/// every order representable regardless of magnitude.
std::vector<double> log_scaled_bessel_half_orders(double a, int n_orders);

/// Linear-domain variant of the above; entries may underflow to zero for
/// high orders at small a.
std::vector<double> scaled_bessel_half_orders(double a, int n_orders);

}  // namespace eqanis
