#pragma once

#include "eqanis/particle.hpp"
#include "eqanis/series.hpp"
#include "eqanis/vec3.hpp"

namespace eqanis {
namespace oracle {

struct OracleZz {
  double partition;        ///< Z
  double z3;               ///< colinear numerator
  double z_perp_coeff;     ///< z_i / (beta H_i), shared transverse coefficient
};

/// Ground-truth evaluation of the partition value and moment numerators by
/// adaptive Gauss-Kronrod quadrature of the one-dimensional integral
/// representations. Entirely independent of the series path: Bessel values
/// come from std::cyl_bessel_i, no recurrences, no log-domain tricks.
OracleZz oracle_zz(const SeriesParams& p, double abs_tol);

/// Ground-truth mean moment by direct product quadrature (Gauss-Legendre in
/// cos(theta) x trapezoid in phi) of m * p(m) with the Boltzmann density,
/// doubling the resolution until the result changes by less than 1e-9.
Vec3 oracle_sphere_moment(const Vec3& field, const Vec3& easy_axis, double alpha_k,
                          const ParticleParams& params);

}  // namespace oracle
}  // namespace eqanis
