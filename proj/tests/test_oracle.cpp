#include <cmath>
#include <random>

#include "doctest.h"
#include "eqanis/constants.hpp"
#include "eqanis/oracle.hpp"
#include "eqanis/quadrature.hpp"
#include "eqanis/series.hpp"

using namespace eqanis;

namespace {

double ihalfint(double a, int half_order_num) {
  // I_{n/2}(a) closed forms for n = 1, 3, 5
  const double pre = std::sqrt(2.0 / (pi * a));
  switch (half_order_num) {
    case 1: return pre * std::sinh(a);
    case 3: return pre * (std::cosh(a) - std::sinh(a) / a);
    case 5:
      return pre * ((1.0 + 3.0 / (a * a)) * std::sinh(a) - 3.0 * std::cosh(a) / a);
    default: return 0.0;
  }
}

}  // namespace

TEST_CASE("gk15 integrates smooth functions") {
  const auto r = integrate_gk15([](double x) { return std::exp(x * x); }, 0.0, 1.0,
                                1e-12);
  CHECK(r.value == doctest::Approx(1.4626517459071816).epsilon(1e-12));
  CHECK_THROWS_AS(integrate_gk15([](double) { return 0.0; }, 0.0, 1.0, 0.0, 0.0),
                  ValidationError);
  // a needle the budget cannot resolve at this tolerance
  CHECK_THROWS_AS(integrate_gk15(
                      [](double x) {
                        double s = 0.0;
                        for (int k = 1; k < 2000; ++k) s += std::cos(6311.0 * k * x) / k;
                        return s;
                      },
                      0.0, 1.0, 1e-14),
                  NumericalError);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(12, x, w);
  double s0 = 0.0, s2 = 0.0, s10 = 0.0;
  for (int i = 0; i < 12; ++i) {
    s0 += w[i];
    s2 += w[i] * x[i] * x[i];
    s10 += w[i] * std::pow(x[i], 10);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(s10 == doctest::Approx(2.0 / 11.0).epsilon(1e-13));
}

TEST_CASE("oracle partition at the trivial points") {
  const auto u = oracle::oracle_zz({0, 0, 0}, 1e-12);
  CHECK(u.partition == doctest::Approx(4.0 * pi).epsilon(1e-12));
  CHECK(u.z3 == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("oracle reproduces the Langevin partition closed form") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ub(0.1, 25.0);
  for (int trial = 0; trial < 15; ++trial) {
    const double bh = ub(rng);
    // c = 0, field split arbitrarily between colinear and orthogonal parts
    std::uniform_real_distribution<double> uang(0.0, pi / 2);
    const double ang = uang(rng);
    const SeriesParams p{bh * std::sin(ang), bh * std::cos(ang), 0.0};
    const auto o = oracle::oracle_zz(p, 1e-11);
    CHECK(o.partition ==
          doctest::Approx(4.0 * pi * std::sinh(bh) / bh).epsilon(1e-10));
  }
}

TEST_CASE("supplementary Bessel integral identity") {
  for (double a : {0.5, 5.0, 20.0}) {
    for (int n : {0, 2, 4}) {
      const auto lhs = integrate_gk15(
          [a, n](double x) {
            return std::cyl_bessel_i(0.0, a * std::sqrt(1.0 - x * x)) *
                   std::pow(x, n);
          },
          0.0, 1.0, 1e-13, 1e-13);
      const double rhs = std::pow(2.0, 0.5 * (n - 1)) * std::tgamma(0.5 * (n + 1)) *
                         std::pow(a, -0.5 * (n + 1)) * ihalfint(a, n + 1);
      CHECK(lhs.value == doctest::Approx(rhs).epsilon(1e-9));
    }
  }
}

TEST_CASE("Bessel differentiation relation by finite differences") {
  // d/dxi [xi^-alpha I_alpha(xi)] = xi^-alpha I_{alpha+1}(xi)
  for (double alpha : {0.0, 1.0}) {
    for (double xi : {0.8, 3.7, 9.2}) {
      const auto f = [alpha](double x) {
        return std::pow(x, -alpha) * std::cyl_bessel_i(alpha, x);
      };
      const double h = 1e-6 * xi;
      const double lhs = (f(xi + h) - f(xi - h)) / (2.0 * h);
      const double rhs = std::pow(xi, -alpha) * std::cyl_bessel_i(alpha + 1.0, xi);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
  }
}

TEST_CASE("sphere oracle basics") {
  ParticleParams params(20e-9, 474e3, 293.0);
  const double m0 = params.moment_magnitude();
  const Vec3 n{0, 0, 1};

  CHECK(oracle::oracle_sphere_moment({0, 0, 0}, n, 0.0, params).norm() <= 1e-12 * m0);

  // isotropic case reduces to the Langevin closed form
  const Vec3 h = Vec3{0.6, -0.3, 0.74} * (4.0 / params.beta());
  const Vec3 m = oracle::oracle_sphere_moment(h, n, 0.0, params);
  const Vec3 ref = normalized(h) * (m0 * langevin(params.beta() * h.norm()));
  CHECK((m - ref).norm() <= 1e-9 * m0);
}

TEST_CASE("both oracles agree on a random parameter sweep") {
  ParticleParams params(20e-9, 474e3, 293.0);
  const double beta = params.beta();
  const double m0 = params.moment_magnitude();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uf(-1.0, 1.0), us(0.1, 15.0),
      uk(0.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 n = normalized({uf(rng), uf(rng), uf(rng)});
    const Vec3 h = normalized({uf(rng), uf(rng), uf(rng)}) * (us(rng) / beta);
    const double ak = uk(rng);

    const Vec3 sphere = oracle::oracle_sphere_moment(h, n, ak, params);

    const double h3 = dot(n, h);
    const Vec3 perp = h - n * h3;
    const auto zz = oracle::oracle_zz({beta * perp.norm(), beta * h3, ak}, 1e-12);
    const Vec3 from_zz =
        (n * (zz.z3 / zz.partition) + perp * (beta * zz.z_perp_coeff / zz.partition)) *
        m0;
    CHECK((sphere - from_zz).norm() <= 1e-8 * m0);
  }
}
