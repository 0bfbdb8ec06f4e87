#pragma once

#include <complex>
#include <vector>

namespace eqanis {

using cplx = std::complex<double>;

/// Unnormalized complex DFT, any length (radix-2 when possible, Bluestein
/// otherwise). inverse = true applies the conjugate transform without the
/// 1/n factor.
void fft(std::vector<cplx>& data, bool inverse = false);

/// Fourier-series coefficients of a real periodic sample vector: bins
/// k = 0..n/2, normalization 1/n (so a pure cosine of unit amplitude puts
/// 1/2 into its bin).
std::vector<cplx> rfft_coeffs(const std::vector<double>& x);

/// Inverse of rfft_coeffs for an n_time-sample real signal.
std::vector<double> irfft_coeffs(const std::vector<cplx>& half, int n_time);

/// Spectral time derivative of a periodic real signal with period T:
/// multiply bin k by i*omega_k, omega_k = 2 pi k / T. The Nyquist bin of
/// even-length signals is zeroed (its derivative phase is undetermined).
std::vector<double> spectral_derivative(const std::vector<double>& x, double period);

}  // namespace eqanis
