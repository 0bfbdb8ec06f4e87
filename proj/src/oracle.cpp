#include "eqanis/oracle.hpp"

#include <cmath>
#include <vector>

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"
#include "eqanis/quadrature.hpp"

namespace eqanis {
namespace oracle {

OracleZz oracle_zz(const SeriesParams& p, double abs_tol) {
  if (!(abs_tol > 0.0)) throw ValidationError("oracle: tolerance must be > 0");
  if (!(p.a >= 0.0) || !(p.c >= 0.0))
    throw ValidationError("oracle: a and c must be >= 0");

  const double a = p.a, b = p.b, c = p.c;
  const double ab = std::abs(b);

  // Everything is integrated with the peak value e^{|b|+c} factored out so
  // the integrands stay bounded; the scale is restored at the end. The
  // hyperbolics fold their half of the shift in directly:
  //   cosh(bx) e^{-|b|} = (e^{|b|(x-1)} + e^{-|b|(x+1)}) / 2.
  const auto cosh_shifted = [ab](double x) {
    return 0.5 * (std::exp(ab * (x - 1.0)) + std::exp(-ab * (x + 1.0)));
  };
  const auto sinh_shifted = [ab, b](double x) {
    const double sb = b >= 0.0 ? 1.0 : -1.0;
    return sb * 0.5 * (std::exp(ab * (x - 1.0)) - std::exp(-ab * (x + 1.0)));
  };
  const auto aniso = [c](double x) { return std::exp(c * (x * x - 1.0)); };

  const auto zf = [&](double x) {
    return std::cyl_bessel_i(0.0, a * std::sqrt(1.0 - x * x)) * cosh_shifted(x) *
           aniso(x);
  };
  const auto z3f = [&](double x) {
    return x * std::cyl_bessel_i(0.0, a * std::sqrt(1.0 - x * x)) * sinh_shifted(x) *
           aniso(x);
  };
  const auto z12f = [&](double x) {
    const double s = std::sqrt(1.0 - x * x);
    return s * std::cyl_bessel_i(1.0, a * s) * cosh_shifted(x) * aniso(x);
  };

  const double rel = 1e-12;
  const double scale = 4.0 * pi * std::exp(ab + c);
  const double z = integrate_gk15(zf, 0.0, 1.0, abs_tol, rel).value * scale;
  const double z3 = integrate_gk15(z3f, 0.0, 1.0, abs_tol, rel).value * scale;
  double zp;
  if (a == 0.0) {
    zp = 0.0;  // I_1(0) = 0; the transverse numerators vanish with H_perp
  } else {
    // z_i = 4 pi (H_i/|H|_12) * integral; dividing by beta H_i leaves 1/a.
    zp = integrate_gk15(z12f, 0.0, 1.0, abs_tol, rel).value * scale / a;
  }
  return {z, z3, zp};
}

Vec3 oracle_sphere_moment(const Vec3& field, const Vec3& easy_axis, double alpha_k,
                          const ParticleParams& params) {
  if (std::abs(easy_axis.squared_norm() - 1.0) > 2.5e-12)
    throw ValidationError("oracle: easy axis must be a unit vector");

  const double beta = params.beta();
  const double m0 = params.moment_magnitude();
  const Vec3 bh = field * beta;
  const double peak = bh.norm() + std::max(alpha_k, 0.0);

  Vec3 prev{0, 0, 0};
  for (int n_theta = 32; n_theta <= 1024; n_theta *= 2) {
    const int n_phi = 2 * n_theta;
    std::vector<double> xs, ws;
    gauss_legendre(n_theta, xs, ws);

    double zsum = 0.0;
    Vec3 msum{0, 0, 0};
    for (int i = 0; i < n_theta; ++i) {
      const double ct = xs[i];
      const double st = std::sqrt(1.0 - ct * ct);
      for (int j = 0; j < n_phi; ++j) {
        const double phi = 2.0 * pi * j / n_phi;
        const Vec3 m{st * std::cos(phi), st * std::sin(phi), ct};
        const double nm = dot(easy_axis, m);
        const double w = ws[i] * std::exp(dot(bh, m) + alpha_k * nm * nm - peak);
        zsum += w;
        msum += m * w;
      }
    }
    const Vec3 moment = msum * (m0 / zsum);
    if (n_theta > 32 && (moment - prev).norm() <= 1e-9 * (m0 + moment.norm()))
      return moment;
    prev = moment;
  }
  return prev;
}

}  // namespace oracle
}  // namespace eqanis
