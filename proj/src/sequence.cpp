#include "eqanis/sequence.hpp"

#include <cmath>
#include <numeric>

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"

namespace eqanis {

FieldSequence FieldSequence::from_scanner(const Vec3& gradient, double amp_x,
                                          double amp_y, double phase_x, double phase_y,
                                          double f_clock, const std::vector<int>& dividers,
                                          double sample_rate) {
  if (gradient.x == 0.0 || gradient.y == 0.0 || gradient.z == 0.0)
    throw ValidationError("sequence: gradient must be invertible (no zero diagonal entry)");
  if (!(f_clock > 0.0)) throw ValidationError("sequence: clock frequency must be > 0");
  if (!(sample_rate > 0.0)) throw ValidationError("sequence: sample rate must be > 0");
  if (dividers.empty() || dividers.size() > 2)
    throw ValidationError("sequence: need one (1D) or two (2D) frequency dividers");
  for (int d : dividers)
    if (d < 1) throw ValidationError("sequence: dividers must be >= 1");
  if (amp_x < 0.0 || amp_y < 0.0)
    throw ValidationError("sequence: amplitudes must be >= 0");

  FieldSequence s;
  s.gradient_ = gradient;
  s.amp_x_ = amp_x;
  s.amp_y_ = amp_y;
  s.phase_x_ = phase_x;
  s.phase_y_ = phase_y;
  s.sample_rate_ = sample_rate;
  s.f_x_ = f_clock / dividers[0];

  if (dividers.size() == 2) {
    // Normalize (clock, d_x, d_y) to the (f_base, N_B) form: after removing
    // the gcd the dividers must be the consecutive pair (N_B+1, N_B).
    const int g = std::gcd(dividers[0], dividers[1]);
    const int rx = dividers[0] / g;
    const int ry = dividers[1] / g;
    if (rx != ry + 1)
      throw ValidationError(
          "sequence: dividers do not reduce to the Lissajous ratio (N+1):N");
    s.n_b_ = ry;
    s.f_base_ = f_clock / g;
    s.f_y_ = f_clock / dividers[1];
    s.period_ = static_cast<double>(s.n_b_) * (s.n_b_ + 1) / s.f_base_;
  } else {
    if (amp_y != 0.0)
      throw ValidationError("sequence: 1D sequence cannot carry a y amplitude");
    s.n_b_ = 0;
    s.f_base_ = s.f_x_;
    s.f_y_ = 0.0;
    s.period_ = 1.0 / s.f_x_;
  }

  const double n_samples = s.period_ * sample_rate;
  const double rounded = std::round(n_samples);
  if (std::abs(n_samples - rounded) > 1e-6 || rounded < 2.0)
    throw ValidationError("sequence: sampling rate not commensurate with the period");
  s.n_samples_ = static_cast<int>(rounded);
  return s;
}

Vec3 FieldSequence::drive_field(double t) const {
  const double hx = amp_x_ * std::sin(2.0 * pi * f_x_ * t + phase_x_);
  const double hy =
      n_b_ > 0 ? amp_y_ * std::sin(2.0 * pi * f_y_ * t + phase_y_) : 0.0;
  return {hx, hy, 0.0};
}

double FieldSequence::max_selection_field(double half_x, double half_y) const {
  const double gx = gradient_.x * half_x;
  const double gy = gradient_.y * half_y;
  return std::sqrt(gx * gx + gy * gy);
}

Vec3 applied_field(const FieldSequence& seq, const Vec3& x, double t) {
  return seq.selection_field(x) + seq.drive_field(t);
}

Vec3 ffp_position(const FieldSequence& seq, double t) {
  const Vec3 hd = seq.drive_field(t);
  const Vec3& g = seq.gradient();
  return {-hd.x / g.x, -hd.y / g.y, -hd.z / g.z};
}

void ScanGrid::validate_against(const FieldSequence& seq) const {
  if (nx < 1 || ny < 1) throw ValidationError("grid: needs at least one position");
  if (!(fov_x > 0.0) || !(fov_y > 0.0))
    throw ValidationError("grid: field of view must be positive");
  const double ex = std::abs(seq.amp_x() / seq.gradient().x);
  const double ey = seq.amp_y() > 0.0 ? std::abs(seq.amp_y() / seq.gradient().y) : ex;
  if (0.5 * fov_x > 2.0 * ex || 0.5 * fov_y > 2.0 * ey)
    throw ValidationError("grid: extends beyond twice the drive-covered region");
}

}  // namespace eqanis
