#include "eqanis/fft.hpp"

#include <cmath>

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"

namespace eqanis {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place, n a power of two.
void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * pi / static_cast<double>(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Bluestein's chirp transform for arbitrary n, built on a power-of-two FFT.
void fft_bluestein(std::vector<cplx>& a, bool inverse) {
  const size_t n = a.size();
  size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cplx> chirp(n);
  for (size_t j = 0; j < n; ++j) {
    // j^2 mod 2n avoids precision loss in the quadratic phase for large j
    const size_t j2 = (j * j) % (2 * n);
    const double ang = (inverse ? 1.0 : -1.0) * pi * static_cast<double>(j2) /
                       static_cast<double>(n);
    chirp[j] = cplx(std::cos(ang), std::sin(ang));
  }

  std::vector<cplx> fa(m, cplx(0, 0)), fb(m, cplx(0, 0));
  for (size_t j = 0; j < n; ++j) fa[j] = a[j] * chirp[j];
  fb[0] = std::conj(chirp[0]);
  for (size_t j = 1; j < n; ++j) fb[j] = fb[m - j] = std::conj(chirp[j]);

  fft_pow2(fa, false);
  fft_pow2(fb, false);
  for (size_t j = 0; j < m; ++j) fa[j] *= fb[j];
  fft_pow2(fa, true);
  const double scale = 1.0 / static_cast<double>(m);
  for (size_t j = 0; j < n; ++j) a[j] = fa[j] * scale * chirp[j];
}

}  // namespace

void fft(std::vector<cplx>& data, bool inverse) {
  if (data.empty()) throw ValidationError("fft: empty input");
  if (data.size() == 1) return;
  if (is_pow2(data.size()))
    fft_pow2(data, inverse);
  else
    fft_bluestein(data, inverse);
}

std::vector<cplx> rfft_coeffs(const std::vector<double>& x) {
  const size_t n = x.size();
  std::vector<cplx> buf(n);
  for (size_t i = 0; i < n; ++i) buf[i] = cplx(x[i], 0.0);
  fft(buf, false);
  std::vector<cplx> half(n / 2 + 1);
  const double scale = 1.0 / static_cast<double>(n);
  for (size_t k = 0; k < half.size(); ++k) half[k] = buf[k] * scale;
  return half;
}

std::vector<double> irfft_coeffs(const std::vector<cplx>& half, int n_time) {
  if (n_time < 1 || half.size() != static_cast<size_t>(n_time / 2 + 1))
    throw ValidationError("irfft: bin count does not match the signal length");
  std::vector<cplx> full(n_time);
  for (int k = 0; k < static_cast<int>(half.size()); ++k) full[k] = half[k];
  for (int k = 1; k < n_time - static_cast<int>(half.size()) + 1; ++k)
    full[n_time - k] = std::conj(half[k]);
  fft(full, true);
  std::vector<double> out(n_time);
  for (int i = 0; i < n_time; ++i) out[i] = full[i].real();
  return out;
}

std::vector<double> spectral_derivative(const std::vector<double>& x, double period) {
  if (!(period > 0.0)) throw ValidationError("derivative: period must be > 0");
  const int n = static_cast<int>(x.size());
  auto half = rfft_coeffs(x);
  for (size_t k = 0; k < half.size(); ++k) {
    const double om = 2.0 * pi * static_cast<double>(k) / period;
    half[k] *= cplx(0.0, om);
  }
  if (n % 2 == 0) half.back() = cplx(0.0, 0.0);
  return irfft_coeffs(half, n);
}

}  // namespace eqanis
