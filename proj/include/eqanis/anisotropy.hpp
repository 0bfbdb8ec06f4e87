#pragma once

#include <variant>

#include "eqanis/particle.hpp"
#include "eqanis/vec3.hpp"

namespace eqanis {

/// Immobilized particles with a common oriented easy axis and constant
/// anisotropy strength.
struct AlignedAnisotropy {
  Vec3 easy_axis{0, 0, 1};  ///< unit vector
  double k_anis = 0.0;      ///< K^anis [J/m^3]
};

/// Fluid particles: radial easy axis n(x) = H^S(x)/|H^S(x)| and power-law
/// strength alpha_K(x) ~ (|H^S(x)|/h)^q. The exponent q keeps the resulting
/// magnetization response differentiable at the center for q >= 1.
struct FluidB3Anisotropy {
  double k_anis_max = 0.0;   ///< K^anis_max [J/m^3]
  double exponent = 1.0;     ///< q > 0
  double boundary_field = 0; ///< h [A/m], selection-field magnitude at the FOV edge
};

class AnisotropyModel {
 public:
  AnisotropyModel() : model_(AlignedAnisotropy{}) {}
  AnisotropyModel(const AlignedAnisotropy& a);
  AnisotropyModel(const FluidB3Anisotropy& f);

  bool is_aligned() const { return std::holds_alternative<AlignedAnisotropy>(model_); }
  const AlignedAnisotropy& aligned() const { return std::get<AlignedAnisotropy>(model_); }
  const FluidB3Anisotropy& fluid() const { return std::get<FluidB3Anisotropy>(model_); }

 private:
  std::variant<AlignedAnisotropy, FluidB3Anisotropy> model_;
};

/// Local anisotropy parameter set at position x.
struct LocalAnisotropy {
  double alpha_k = 0.0;   ///< dimensionless strength
  Vec3 easy_axis{0, 0, 1};
};

/// Evaluate the anisotropy parameter set at x. The selection-field gradient
/// supplies H^S(x) for the fluid model. At the exact center the fluid easy
/// axis is undefined; alpha_K = 0 with n = e3 is returned by convention
/// (continuity makes the axis irrelevant there).
LocalAnisotropy anisotropy_at(const AnisotropyModel& model, const ParticleParams& params,
                              const Vec3& gradient, const Vec3& x);

}  // namespace eqanis
