#pragma once

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"

namespace eqanis {

/// Monodisperse particle core parameters. The magnetic moment and the field
/// coupling beta = mu0*m0/(kB*T) are derived, not stored.
struct ParticleParams {
  double diameter = 20e-9;                 ///< core diameter D [m]
  double saturation_magnetization = 474e3; ///< M_S [A/m] (magnetite default)
  double temperature = 293.0;              ///< T_P [K]

  ParticleParams() = default;
  ParticleParams(double d, double ms, double t)
      : diameter(d), saturation_magnetization(ms), temperature(t) {
    validate();
  }

  void validate() const {
    if (!(diameter > 0.0)) throw ValidationError("particle: diameter must be > 0");
    if (!(saturation_magnetization > 0.0))
      throw ValidationError("particle: saturation magnetization must be > 0");
    if (!(temperature > 0.0)) throw ValidationError("particle: temperature must be > 0");
  }

  /// Core volume V_c = pi*D^3/6 [m^3].
  double core_volume() const { return pi * diameter * diameter * diameter / 6.0; }

  /// Moment magnitude m0 = M_S * V_c [A*m^2].
  double moment_magnitude() const { return saturation_magnetization * core_volume(); }

  /// Field coupling beta = mu0*m0/(kB*T_P) [m/A].
  double beta() const {
    return mu0 * moment_magnitude() / (k_boltzmann * temperature);
  }
};

}  // namespace eqanis
