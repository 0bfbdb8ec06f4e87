#include <cmath>

#include "doctest.h"
#include "eqanis/anisotropy.hpp"
#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"
#include "eqanis/particle.hpp"
#include "eqanis/sequence.hpp"

using namespace eqanis;

namespace {

// Bruker-style 2D sequence: -1 T/m/mu0 gradient in x/y, +2 in z,
// 12 mT/mu0 amplitudes, 2.5 MHz clock with dividers 102/96.
FieldSequence bruker_2d() {
  const double g = 1.0 / mu0;
  const double amp = 0.012 / mu0;
  return FieldSequence::from_scanner({-g, -g, 2.0 * g}, amp, amp, 0.0, 0.0, 2.5e6,
                                     {102, 96}, 2.5e6);
}

}  // namespace

TEST_CASE("particle derived quantities") {
  ParticleParams p(20e-9, 474e3, 293.0);
  const double vc = pi * std::pow(20e-9, 3) / 6.0;
  CHECK(p.core_volume() == doctest::Approx(vc).epsilon(1e-14));
  CHECK(p.moment_magnitude() == doctest::Approx(474e3 * vc).epsilon(1e-14));
  CHECK(p.beta() == doctest::Approx(mu0 * 474e3 * vc / (k_boltzmann * 293.0)).epsilon(1e-14));
  CHECK(p.beta() > 0.0);

  CHECK_THROWS_AS(ParticleParams(-1e-9, 474e3, 293.0), ValidationError);
  CHECK_THROWS_AS(ParticleParams(20e-9, 0.0, 293.0), ValidationError);
  CHECK_THROWS_AS(ParticleParams(20e-9, 474e3, 0.0), ValidationError);
}

TEST_CASE("beta scales as D^3") {
  double prev = 0.0;
  for (double d = 15e-9; d <= 25e-9; d += 1e-9) {
    ParticleParams p(d, 474e3, 293.0);
    const double scaled = p.beta() / (d * d * d);
    if (prev != 0.0) CHECK(scaled == doctest::Approx(prev).epsilon(1e-12));
    prev = scaled;
  }
}

TEST_CASE("divider normalization to (f_base, N_B)") {
  const auto seq = bruker_2d();
  CHECK(seq.divider_ratio() == 16);
  CHECK(seq.f_base() == doctest::Approx(2.5e6 / 6.0).epsilon(1e-14));
  CHECK(seq.period() == doctest::Approx(652.8e-6).epsilon(1e-12));
  CHECK(seq.samples_per_period() == 1632);
  CHECK(seq.f_x() == doctest::Approx(2.5e6 / 102.0));
  CHECK(seq.f_y() == doctest::Approx(2.5e6 / 96.0));
  // configured ratio f_x/f_y = N_B/(N_B+1)
  CHECK(seq.f_x() / seq.f_y() == doctest::Approx(16.0 / 17.0).epsilon(1e-14));
}

TEST_CASE("sequence validation") {
  const double g = 1.0 / mu0;
  CHECK_THROWS_AS(FieldSequence::from_scanner({0, -g, 2 * g}, 1, 1, 0, 0, 2.5e6,
                                              {102, 96}, 2.5e6),
                  ValidationError);
  // dividers that do not reduce to (N+1):N
  CHECK_THROWS_AS(FieldSequence::from_scanner({-g, -g, 2 * g}, 1, 1, 0, 0, 2.5e6,
                                              {102, 95}, 2.5e6),
                  ValidationError);
  // non-commensurate sampling
  CHECK_THROWS_AS(FieldSequence::from_scanner({-g, -g, 2 * g}, 1, 1, 0, 0, 2.5e6,
                                              {102, 96}, 1.0e6 + 7.0),
                  ValidationError);
}

TEST_CASE("applied field at origin and unit conversion") {
  const auto seq = bruker_2d();
  const Vec3 zero = applied_field(seq, {0, 0, 0}, 0.0);
  CHECK(zero.norm() == 0.0);

  // -1 T/m/mu0 over 1 mm gives -795.7747 A/m in x.
  const Vec3 h = applied_field(seq, {1e-3, 0, 0}, 0.0);
  CHECK(h.x == doctest::Approx(-795.77471545947668).epsilon(1e-12));
  CHECK(h.y == 0.0);
  CHECK(h.z == 0.0);
}

TEST_CASE("applied field is T_D periodic") {
  const auto seq = bruker_2d();
  const Vec3 x{3e-3, -2e-3, 1e-3};
  for (double t : {0.0, 1.7e-5, 2.31e-4, 6.0e-4}) {
    const Vec3 h0 = applied_field(seq, x, t);
    const Vec3 h1 = applied_field(seq, x, t + seq.period());
    CHECK((h1 - h0).norm() <= 1e-12 * (h0.norm() + seq.amp_x()));
  }
}

TEST_CASE("ffp position zeroes the field and spans 12 mm") {
  const auto seq = bruker_2d();
  const double amp = seq.amp_x();
  double max_x = 0.0;
  for (int i = 0; i < 1632; ++i) {
    const double t = i / seq.sample_rate();
    const Vec3 x = ffp_position(seq, t);
    CHECK(applied_field(seq, x, t).norm() <= 1e-10 * amp);
    max_x = std::max(max_x, std::abs(x.x));
  }
  CHECK(max_x == doctest::Approx(0.012).epsilon(1e-4));  // A_x/|G_x| = 12 mm
}

TEST_CASE("ffp at drive zero is the origin") {
  const double g = 1.0 / mu0;
  const auto seq = FieldSequence::from_scanner({-g, -g, 2 * g}, 0.012 / mu0,
                                               0.012 / mu0, 0.0, 0.0, 2.5e6,
                                               {102, 96}, 2.5e6);
  CHECK(ffp_position(seq, 0.0).norm() == 0.0);
}

TEST_CASE("aligned anisotropy is constant in x") {
  ParticleParams p(19e-9, 474e3, 293.0);
  AnisotropyModel model(AlignedAnisotropy{normalized({1, 1, 0}), 1400.0});
  const Vec3 g{-1.0 / mu0, -1.0 / mu0, 2.0 / mu0};
  const auto a0 = anisotropy_at(model, p, g, {0, 0, 0});
  const auto a1 = anisotropy_at(model, p, g, {5e-3, -2e-3, 0});
  CHECK(a0.alpha_k == a1.alpha_k);
  CHECK(a0.alpha_k ==
        doctest::Approx(p.core_volume() * 1400.0 / (k_boltzmann * 293.0)).epsilon(1e-14));
  CHECK(dot(a0.easy_axis, a1.easy_axis) == doctest::Approx(1.0));
}

TEST_CASE("fluid-B3 anisotropy field dependence") {
  ParticleParams p(19e-9, 474e3, 293.0);
  const Vec3 g{-1.0 / mu0, -1.0 / mu0, 2.0 / mu0};
  const double h = 18e-3 / mu0;
  AnisotropyModel model(FluidB3Anisotropy{3500.0, 2.0, h});

  SUBCASE("degenerate center") {
    const auto a = anisotropy_at(model, p, g, {0, 0, 0});
    CHECK(a.alpha_k == 0.0);
    CHECK(a.easy_axis.z == 1.0);
  }
  SUBCASE("boundary value and q = 2 quarter point") {
    // position with |H^S| = h lies on the x axis at h/|G_x|
    const double xb = h / (1.0 / mu0);
    const auto ab = anisotropy_at(model, p, g, {xb, 0, 0});
    const double expected = p.core_volume() * 3500.0 / (k_boltzmann * 293.0);
    CHECK(ab.alpha_k == doctest::Approx(expected).epsilon(1e-12));
    const auto ah = anisotropy_at(model, p, g, {0.5 * xb, 0, 0});
    CHECK(ah.alpha_k == doctest::Approx(0.25 * expected).epsilon(1e-12));
  }
  SUBCASE("easy axis is radial along G x") {
    for (const Vec3 x : {Vec3{3e-3, 4e-3, 0}, Vec3{-2e-3, 7e-3, 1e-3}}) {
      const auto a = anisotropy_at(model, p, g, x);
      const Vec3 hs{g.x * x.x, g.y * x.y, g.z * x.z};
      CHECK(cross(a.easy_axis, hs).norm() <= 1e-12 * hs.norm());
      CHECK(dot(a.easy_axis, hs) > 0.0);
    }
  }
  SUBCASE("alpha_K monotone in |x| along a ray") {
    double prev = -1.0;
    for (double r = 1e-3; r < 12e-3; r += 1e-3) {
      const auto a = anisotropy_at(model, p, g, {r, 0.5 * r, 0});
      CHECK(a.alpha_k >= prev);
      prev = a.alpha_k;
    }
  }
}

TEST_CASE("scan grid layout") {
  ScanGrid grid{17, 15, 34e-3, 30e-3};
  CHECK(grid.size() == 255);
  CHECK(grid.position(0, 0).x == doctest::Approx(-16e-3));
  CHECK(grid.position(16, 0).x == doctest::Approx(16e-3));
  CHECK(grid.position(0, 14).y == doctest::Approx(14e-3));
  // row-major, x fastest
  CHECK(grid.position(1).x == doctest::Approx(grid.position(1, 0).x));
  CHECK(grid.position(17).y == doctest::Approx(grid.position(0, 1).y));
  grid.validate_against(bruker_2d());

  ScanGrid huge{5, 5, 200e-3, 200e-3};
  CHECK_THROWS_AS(huge.validate_against(bruker_2d()), ValidationError);
}
