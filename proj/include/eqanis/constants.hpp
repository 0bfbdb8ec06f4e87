#pragma once

#include <numbers>

namespace eqanis {

/// Vacuum permeability [T*m/A].
inline constexpr double mu0 = 4.0 * std::numbers::pi * 1e-7;

/// Boltzmann constant [J/K] (exact, 2019 SI).
inline constexpr double k_boltzmann = 1.380649e-23;

inline constexpr double pi = std::numbers::pi;

}  // namespace eqanis
