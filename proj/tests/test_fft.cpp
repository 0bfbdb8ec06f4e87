#include <cmath>
#include <random>

#include "doctest.h"
#include "eqanis/constants.hpp"
#include "eqanis/fft.hpp"

using namespace eqanis;

namespace {

std::vector<cplx> naive_dft(const std::vector<cplx>& x, bool inverse) {
  const size_t n = x.size();
  std::vector<cplx> out(n);
  for (size_t k = 0; k < n; ++k) {
    cplx acc(0, 0);
    for (size_t j = 0; j < n; ++j) {
      const double ang = (inverse ? 2.0 : -2.0) * pi * double(j * k % n) / double(n);
      acc += x[j] * cplx(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("fft matches the naive DFT on awkward sizes") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {8, 17, 51, 102, 256, 1632}) {
    std::vector<cplx> x(n);
    for (auto& v : x) v = cplx(u(rng), u(rng));
    auto ref = naive_dft(x, false);
    auto got = x;
    fft(got, false);
    double err = 0.0, scale = 0.0;
    for (int i = 0; i < n; ++i) {
      err = std::max(err, std::abs(got[i] - ref[i]));
      scale = std::max(scale, std::abs(ref[i]));
    }
    CHECK(err <= 1e-11 * scale);

    // round trip
    fft(got, true);
    double rt = 0.0;
    for (int i = 0; i < n; ++i) rt = std::max(rt, std::abs(got[i] / double(n) - x[i]));
    CHECK(rt <= 1e-12);
  }
}

TEST_CASE("rfft coefficients of a known tone") {
  const int n = 96;
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j)
    x[j] = 2.0 + std::cos(2.0 * pi * 3.0 * j / n) + 0.5 * std::sin(2.0 * pi * 7.0 * j / n);
  const auto c = rfft_coeffs(x);
  CHECK(c[0].real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c[3].real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(c[3].imag()) < 1e-12);
  CHECK(c[7].imag() == doctest::Approx(-0.25).epsilon(1e-12));
  for (int k : {1, 2, 4, 5, 6, 8, 20})
    CHECK(std::abs(c[k]) < 1e-12);

  const auto back = irfft_coeffs(c, n);
  for (int j = 0; j < n; ++j) CHECK(back[j] == doctest::Approx(x[j]).epsilon(1e-12));
}

TEST_CASE("spectral derivative of a sinusoid") {
  const int n = 1632;
  const double period = 652.8e-6;
  const double f = 16.0 / period;
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = std::sin(2.0 * pi * f * (j * period / n));
  const auto d = spectral_derivative(x, period);
  for (int j = 0; j < n; j += 37) {
    const double expect = 2.0 * pi * f * std::cos(2.0 * pi * f * (j * period / n));
    CHECK(d[j] == doctest::Approx(expect).epsilon(1e-9));
  }
  // derivative kills constants
  std::vector<double> ones(n, 3.25);
  const auto dz = spectral_derivative(ones, period);
  for (int j = 0; j < n; j += 100) CHECK(std::abs(dz[j]) < 1e-9);
}
