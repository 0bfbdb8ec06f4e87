#pragma once

#include <iosfwd>
#include <vector>

#include "eqanis/vec3.hpp"

namespace eqanis {

/// Time-sampled mean magnetic moment at one spatial position, uniformly
/// sampled over one excitation period.
struct MomentTrace {
  std::vector<Vec3> samples;  ///< mean moment [A*m^2]
  double dt = 0.0;            ///< sample spacing [s]
  bool resolution_warning = false;  ///< set when the FP degree looked too low

  double period() const { return dt * static_cast<double>(samples.size()); }

  /// CSV export: header plus one "t,m_x,m_y,m_z" row per sample.
  void write_csv(std::ostream& os) const;
};

}  // namespace eqanis
