#pragma once

#include <vector>

namespace eqanis {

/// Real orthonormal spherical harmonics up to degree l_max.
///
/// Index layout: index(l, m) = l^2 + l + m with m = -l..l; negative m hold
/// the sin(|m| phi) partners, positive m the cos(m phi) ones. Each basis
/// function factors as psi = p(theta) * T(phi), which the Fokker-Planck
/// assembly exploits.
class RealSphericalHarmonics {
 public:
  explicit RealSphericalHarmonics(int l_max);

  int l_max() const { return l_max_; }
  int size() const { return (l_max_ + 1) * (l_max_ + 1); }
  static int index(int l, int m) { return l * l + l + m; }

  /// Values of all basis functions at (cos_theta, phi).
  void values(double cos_theta, double phi, std::vector<double>& out) const;

  /// Associated-Legendre parts p_lm(theta) (already carrying the sqrt(2)
  /// of the real basis for m > 0) and their theta-derivatives, for
  /// m = |m|; sized (l_max+1)*(l_max+2)/2, packed by packed_index().
  void legendre_parts(double cos_theta, std::vector<double>& p,
                      std::vector<double>& dp_dtheta) const;

  static int packed_index(int l, int m_abs) { return l * (l + 1) / 2 + m_abs; }

 private:
  int l_max_;
  // recurrence coefficients for the normalized Legendre functions
  std::vector<double> a_, b_;
};

}  // namespace eqanis
