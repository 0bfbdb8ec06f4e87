#include "eqanis/anisotropy.hpp"

#include <cmath>

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"

namespace eqanis {

AnisotropyModel::AnisotropyModel(const AlignedAnisotropy& a) : model_(a) {
  if (std::abs(a.easy_axis.norm() - 1.0) > 1e-12)
    throw ValidationError("anisotropy: easy axis must be a unit vector");
  if (a.k_anis < 0.0) throw ValidationError("anisotropy: K must be >= 0");
}

AnisotropyModel::AnisotropyModel(const FluidB3Anisotropy& f) : model_(f) {
  if (f.k_anis_max < 0.0) throw ValidationError("anisotropy: K_max must be >= 0");
  if (!(f.exponent > 0.0)) throw ValidationError("anisotropy: exponent q must be > 0");
  if (!(f.boundary_field > 0.0))
    throw ValidationError("anisotropy: boundary field h must be > 0");
}

LocalAnisotropy anisotropy_at(const AnisotropyModel& model, const ParticleParams& params,
                              const Vec3& gradient, const Vec3& x) {
  // alpha_K = beta*K/(mu0*M_S) = V_c*K/(kB*T).
  const double strength_per_k =
      params.core_volume() / (k_boltzmann * params.temperature);

  if (model.is_aligned()) {
    const auto& a = model.aligned();
    return {strength_per_k * a.k_anis, a.easy_axis};
  }

  const auto& f = model.fluid();
  const Vec3 hs{gradient.x * x.x, gradient.y * x.y, gradient.z * x.z};
  const double mag = hs.norm();
  if (mag < 1e-12 * f.boundary_field) return {0.0, Vec3{0, 0, 1}};
  const double alpha = strength_per_k * f.k_anis_max *
                       std::pow(mag / f.boundary_field, f.exponent);
  return {alpha, hs / mag};
}

}  // namespace eqanis
