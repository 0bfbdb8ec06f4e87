#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "eqanis/particle.hpp"
#include "eqanis/sequence.hpp"
#include "eqanis/trace.hpp"
#include "eqanis/vec3.hpp"

namespace eqanis {

/// Rates of the Neel convection field
///   b = a1 H x m + a2 (m x H) x m + a3 (n.m) n x m + a4 (n.m) (m x n) x m
/// in the Landau-Lifshitz parameterization. The alignment rates are tied to
/// the diffusion strength so that the Boltzmann density is the exact
/// stationary solution: a2 = beta/(2 tau), a4 = alpha_K/tau, a3 = 2 a1
/// alpha_K/beta.
struct NeelCoefficients {
  double alpha1;        ///< field precession [m/(A s)]
  double alpha2;        ///< field alignment [m/(A s)]
  double alpha3;        ///< anisotropy precession [1/s]
  double alpha4;        ///< anisotropy alignment [1/s]
  double inv_two_tau;   ///< diffusion rate 1/(2 tau) [1/s]

  double tau() const { return 0.5 / inv_two_tau; }
};

NeelCoefficients neel_coefficients(const ParticleParams& params, double alpha_k,
                                   double gyromagnetic_ratio = 1.75e11,
                                   double damping = 0.1);

struct FpOptions {
  double rel_tol = 2e-4;
  double abs_tol = 1e-6;
  int l_sph = 40;                      ///< spherical-harmonic degree cutoff
  double gyromagnetic_ratio = 1.75e11; ///< [rad/(s T)]
  double damping = 0.1;
  int warmup_periods = 1;  ///< discarded before the recorded period
};

/// PDF expansion in the real orthonormal spherical-harmonic basis.
struct SphericalHarmonicState {
  int l_sph = 0;
  double time = 0.0;
  std::vector<double> coeffs;

  static SphericalHarmonicState uniform(int l_sph);

  double total_mass() const;  ///< integral of the PDF (1 by construction)
  /// E[m] of the expanded density (dimensionless direction average).
  Vec3 moment() const;
  /// Energy in the top two degrees relative to all l >= 1 energy.
  double tail_energy_fraction() const;
  /// PDF sampled on a (cos theta, phi) product grid, theta-major.
  std::vector<double> pdf_on_grid(const std::vector<double>& cos_thetas,
                                  int n_phi) const;
};

/// Method-of-lines solver for the Neel rotation Fokker-Planck equation on
/// the sphere. Galerkin in spherical harmonics; the diffusion term is
/// diagonal, the convection matrices are assembled once per solver with the
/// field dependence factored into three constant matrices. Time stepping is
/// a linearly implicit (W-method) second-order Rosenbrock scheme with an
/// L-stable stability function and reuse of the sparse LU factor.
///
/// All work happens in the frame whose third axis is the easy axis; fields
/// are rotated in and moments rotated back.
class FpSolver {
 public:
  FpSolver(const ParticleParams& params, double alpha_k, const Vec3& easy_axis,
           const FpOptions& opts = {});
  ~FpSolver();
  FpSolver(FpSolver&&) noexcept;
  FpSolver& operator=(FpSolver&&) noexcept;

  const NeelCoefficients& coefficients() const;

  /// Integrate from `start` (uniform PDF when null) under the lab-frame
  /// field trajectory, returning the state at t1.
  SphericalHarmonicState evolve(const std::function<Vec3(double)>& field_lab,
                                double t0, double t1,
                                const SphericalHarmonicState* start = nullptr) const;

  /// Periodic steady-state moment trace at position x: warm-up periods are
  /// simulated and discarded, then one period is recorded at the sequence
  /// sample rate.
  MomentTrace solve_periodic(const FieldSequence& seq, const Vec3& x) const;

  /// State as of the last evolve/solve call mapped into the easy frame.
  /// Static-field equilibration tests use this together with pdf_on_grid.

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-call form: periodic steady-state trace for (sequence, position).
MomentTrace fp_solve(const FieldSequence& seq, const Vec3& x, const Vec3& easy_axis,
                     double alpha_k, const ParticleParams& params,
                     const FpOptions& opts = {});

}  // namespace eqanis
