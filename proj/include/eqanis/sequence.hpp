#pragma once

#include <vector>

#include "eqanis/vec3.hpp"

namespace eqanis {

/// Drive-field / selection-field sequence of an FFP scanner.
///
/// The drive frequencies follow the Lissajous form f_x = f_base/(N_B+1),
/// f_y = f_base/N_B. Scanner-style configuration (master clock plus integer
/// dividers) is normalized into this form by from_scanner(). A pure 1D
/// excitation is encoded with divider_ratio == 0 and amp_y == 0.
class FieldSequence {
 public:
  /// Construct from scanner-style parameters: master clock f_clock [Hz] and
  /// one or two integer frequency dividers (f_i = f_clock / dividers[i]).
  /// Gradient is the diagonal of G in [A/m per m].
  static FieldSequence from_scanner(const Vec3& gradient_Am2, double amp_x_Am,
                                    double amp_y_Am, double phase_x, double phase_y,
                                    double f_clock, const std::vector<int>& dividers,
                                    double sample_rate);

  const Vec3& gradient() const { return gradient_; }
  double amp_x() const { return amp_x_; }
  double amp_y() const { return amp_y_; }
  double phase_x() const { return phase_x_; }
  double phase_y() const { return phase_y_; }
  double f_x() const { return f_x_; }
  double f_y() const { return f_y_; }
  /// Base frequency f_B of the normalized (f_B, N_B) form; 2D only.
  double f_base() const { return f_base_; }
  /// Frequency divider N_B of the normalized form; 0 for 1D sequences.
  int divider_ratio() const { return n_b_; }
  bool is_2d() const { return n_b_ > 0; }
  /// Duration of one excitation period T_D [s].
  double period() const { return period_; }
  double sample_rate() const { return sample_rate_; }
  /// Samples per period (integral by construction).
  int samples_per_period() const { return n_samples_; }

  /// Drive field H^D(t) [A/m].
  Vec3 drive_field(double t) const;

  /// Selection field H^S(x) = G x [A/m].
  Vec3 selection_field(const Vec3& x) const {
    return {gradient_.x * x.x, gradient_.y * x.y, gradient_.z * x.z};
  }

  /// Largest selection-field magnitude over an axis-aligned box spanning
  /// [-hx,hx] x [-hy,hy] in the z = 0 plane (attained at a corner).
  double max_selection_field(double half_x, double half_y) const;

 private:
  FieldSequence() = default;

  Vec3 gradient_;
  double amp_x_ = 0, amp_y_ = 0;
  double phase_x_ = 0, phase_y_ = 0;
  double f_x_ = 0, f_y_ = 0;
  double f_base_ = 0;
  int n_b_ = 0;
  double period_ = 0;
  double sample_rate_ = 0;
  int n_samples_ = 0;
};

/// Applied field H(x, t) = G x + H^D(t) [A/m]; periodic in t with period T_D.
Vec3 applied_field(const FieldSequence& seq, const Vec3& x, double t);

/// Field-free point x(t) = -G^{-1} H^D(t) [m].
Vec3 ffp_position(const FieldSequence& seq, double t);

/// Regular grid of sample positions in the z = 0 plane, cell-center
/// convention, row-major with x running fastest.
struct ScanGrid {
  int nx = 1;
  int ny = 1;
  double fov_x = 0.0;  ///< full extent in x [m]
  double fov_y = 0.0;  ///< full extent in y [m]

  int size() const { return nx * ny; }
  double dx() const { return fov_x / nx; }
  double dy() const { return fov_y / ny; }

  Vec3 position(int ix, int iy) const {
    return {-0.5 * fov_x + (ix + 0.5) * dx(), -0.5 * fov_y + (iy + 0.5) * dy(), 0.0};
  }
  Vec3 position(int flat) const { return position(flat % nx, flat / nx); }

  std::vector<Vec3> positions() const {
    std::vector<Vec3> p;
    p.reserve(size());
    for (int iy = 0; iy < ny; ++iy)
      for (int ix = 0; ix < nx; ++ix) p.push_back(position(ix, iy));
    return p;
  }

  /// Reject grids wildly outside the drive-covered region. Calibration
  /// grids commonly extend somewhat beyond the FFP excursion, so the check
  /// allows a factor of two per axis.
  void validate_against(const FieldSequence& seq) const;
};

}  // namespace eqanis
