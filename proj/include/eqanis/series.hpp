#pragma once

#include "eqanis/particle.hpp"
#include "eqanis/vec3.hpp"

namespace eqanis {

/// Langevin function coth(xi) - 1/xi, with a Taylor branch below |xi| = 1e-3
/// where the direct form cancels.
double langevin(double xi);

/// Dimensionless arguments of the partition-function series: a couples the
/// field component orthogonal to the easy axis, b the colinear component,
/// c is the anisotropy strength.
struct SeriesParams {
  double a = 0.0;  ///< beta * |H_perp|, >= 0
  double b = 0.0;  ///< beta * (n . H)
  double c = 0.0;  ///< alpha_K, >= 0
};

struct SeriesResult {
  double log_z;             ///< log of the partition value Z
  double moment_parallel;   ///< z3 / Z, in (-1, 1)
  double moment_perp_coeff; ///< z_i / (beta H_i Z), common to both transverse axes
  int terms_used;           ///< number of series terms summed

  double partition() const;  ///< Z itself (may overflow for extreme arguments)
};

inline constexpr double series_default_tol = 1e-6;
inline constexpr int series_default_cap = 64;
inline constexpr int series_max_cap = 256;

/// Evaluate the three partition-series sums with adaptive truncation: the
/// summation stops once three consecutive terms each fall below
/// tol * (current partial sum) in all three series, or fails at l_max.
SeriesResult eval_series(const SeriesParams& p, double tol = series_default_tol,
                         int l_max = series_default_cap);

/// Same sums with a fixed term count and no stop rule (reference evaluations
/// and truncation studies).
SeriesResult eval_series_fixed(const SeriesParams& p, int terms);

/// Mean magnetic moment [A*m^2] of the anisotropic equilibrium model.
///
/// The field is split into the colinear part (n.H) n and the orthogonal
/// remainder; the result is a linear combination of n and H_perp, so no
/// rotation matrix is ever materialized. For alpha_k < 1e-8 the isotropic
/// closed form m0 * L(beta|H|) H/|H| is returned directly.
Vec3 mean_moment(const Vec3& field, const Vec3& easy_axis, double alpha_k,
                 const ParticleParams& params, double tol = series_default_tol,
                 int l_max = series_default_cap);

/// mean_moment / m0 (the model's dimensionless response).
Vec3 normalized_moment(const Vec3& field, const Vec3& easy_axis, double alpha_k,
                       const ParticleParams& params, double tol = series_default_tol,
                       int l_max = series_default_cap);

}  // namespace eqanis
