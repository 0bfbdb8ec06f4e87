#include "eqanis/fokker_planck.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"
#include "eqanis/quadrature.hpp"
#include "eqanis/sphharm.hpp"

namespace eqanis {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Structural Galerkin matrices
//
// The convection field splits into eight parameter-free building blocks
// (precession/alignment for unit fields along x, y, z plus the two
// anisotropy terms with n = e3). Their Galerkin matrices
//   C_ij = integral (b . grad psi_i) psi_j dS
// depend only on the degree cutoff, so they are assembled once per cutoff
// and shared. The phi integrals are exact trigonometric sums; the theta
// integral is Gauss-Legendre of sufficient order, so the matrices are exact
// up to roundoff.
// ---------------------------------------------------------------------------

enum StructField {
  kPrecX = 0, kAlignX, kPrecY, kAlignY, kPrecZ, kAlignZ, kPrecAnis, kAlignAnis,
  kNumFields
};

struct OperatorTables {
  int l_max = 0;
  std::array<SpMat, kNumFields> conv;
  Vec laplace;  // l(l+1) per basis index
};

// phi-factor type of basis index m: 0 for m = 0, 2|m| for cos, 2|m|+1 for sin.
int phi_type(int m) { return m == 0 ? 0 : (m > 0 ? 2 * m : -2 * m + 1); }
int type_abs_m(int t) { return (t + 1) / 2; }

std::shared_ptr<const OperatorTables> assemble_tables(int l_max) {
  auto tab = std::make_shared<OperatorTables>();
  tab->l_max = l_max;
  const RealSphericalHarmonics sh(l_max);
  const int n = sh.size();

  tab->laplace.resize(n);
  for (int l = 0; l <= l_max; ++l)
    for (int m = -l; m <= l; ++m)
      tab->laplace[RealSphericalHarmonics::index(l, m)] = static_cast<double>(l) * (l + 1);

  // candidate (i, j) coupling pairs: |dl| <= 4 and |d|m|| <= 3
  struct Pair {
    int i, j;
    int li, mi, lj, mj;
  };
  std::vector<Pair> pairs;
  for (int li = 0; li <= l_max; ++li)
    for (int mi = -li; mi <= li; ++mi)
      for (int lj = std::max(0, li - 4); lj <= std::min(l_max, li + 4); ++lj)
        for (int mj = -lj; mj <= lj; ++mj) {
          if (std::abs(std::abs(mi) - std::abs(mj)) > 3) continue;
          pairs.push_back({RealSphericalHarmonics::index(li, mi),
                           RealSphericalHarmonics::index(lj, mj), li, mi, lj, mj});
        }

  std::vector<std::array<double, kNumFields>> acc(pairs.size());
  for (auto& a : acc) a.fill(0.0);

  const int n_theta = l_max + 5;
  const int n_phi = 2 * l_max + 8;
  std::vector<double> xs, ws;
  gauss_legendre(n_theta, xs, ws);
  const double wphi = 2.0 * pi / n_phi;

  const int n_types = 2 * l_max + 2;
  // trig factor values per type and phi node (independent of theta)
  std::vector<double> tval(static_cast<size_t>(n_types) * n_phi);
  std::vector<double> cphi(n_phi), sphi(n_phi);
  for (int jp = 0; jp < n_phi; ++jp) {
    const double phi = 2.0 * pi * jp / n_phi;
    cphi[jp] = std::cos(phi);
    sphi[jp] = std::sin(phi);
    for (int t = 0; t < n_types; ++t) {
      const int m = type_abs_m(t);
      tval[static_cast<size_t>(t) * n_phi + jp] =
          t == 0 ? 1.0 : (t % 2 == 0 ? std::cos(m * phi) : std::sin(m * phi));
    }
  }

  std::vector<double> p, dp;
  // per-theta tables S[f][comp][ta*n_types + tb]
  std::vector<double> stheta(static_cast<size_t>(kNumFields) * n_types * n_types);
  std::vector<double> sphic(static_cast<size_t>(kNumFields) * n_types * n_types);
  std::vector<std::array<double, 2>> bcomp(static_cast<size_t>(kNumFields) * n_phi);

  for (int it = 0; it < n_theta; ++it) {
    const double x = xs[it];
    const double s = std::sqrt(1.0 - x * x);
    const double wt = ws[it];
    sh.legendre_parts(x, p, dp);

    // velocity components b.e_theta, b.e_phi for the eight fields
    for (int jp = 0; jp < n_phi; ++jp) {
      const Vec3 m{s * cphi[jp], s * sphi[jp], x};
      const Vec3 et{x * cphi[jp], x * sphi[jp], -s};
      const Vec3 ep{-sphi[jp], cphi[jp], 0.0};
      const std::array<Vec3, 3> axes = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
      for (int d = 0; d < 3; ++d) {
        const Vec3 prec = cross(axes[d], m);
        const Vec3 align = axes[d] - m * dot(m, axes[d]);
        bcomp[static_cast<size_t>(2 * d) * n_phi + jp] = {dot(prec, et), dot(prec, ep)};
        bcomp[static_cast<size_t>(2 * d + 1) * n_phi + jp] = {dot(align, et),
                                                              dot(align, ep)};
      }
      const double nm = m.z;  // easy axis e3
      const Vec3 aprec = cross(Vec3{0, 0, 1}, m) * nm;
      const Vec3 aalign = (Vec3{0, 0, 1} - m * nm) * nm;
      bcomp[static_cast<size_t>(kPrecAnis) * n_phi + jp] = {dot(aprec, et),
                                                            dot(aprec, ep)};
      bcomp[static_cast<size_t>(kAlignAnis) * n_phi + jp] = {dot(aalign, et),
                                                             dot(aalign, ep)};
    }

    // phi sums S[ta][tb] = sum_j wphi * b(phi_j) * T_ta(phi_j) * T_tb(phi_j),
    // restricted to ||m_a| - |m_b|| <= 3
    std::fill(stheta.begin(), stheta.end(), 0.0);
    std::fill(sphic.begin(), sphic.end(), 0.0);
    for (int f = 0; f < kNumFields; ++f) {
      for (int ta = 0; ta < n_types; ++ta) {
        const int ma = type_abs_m(ta);
        for (int tb = 0; tb < n_types; ++tb) {
          if (std::abs(ma - type_abs_m(tb)) > 3) continue;
          double s1 = 0.0, s2 = 0.0;
          const double* va = &tval[static_cast<size_t>(ta) * n_phi];
          const double* vb = &tval[static_cast<size_t>(tb) * n_phi];
          const auto* bc = &bcomp[static_cast<size_t>(f) * n_phi];
          for (int jp = 0; jp < n_phi; ++jp) {
            const double tt = va[jp] * vb[jp];
            s1 += bc[jp][0] * tt;
            s2 += bc[jp][1] * tt;
          }
          const size_t o = (static_cast<size_t>(f) * n_types + ta) * n_types + tb;
          stheta[o] = s1 * wphi;
          sphic[o] = s2 * wphi;
        }
      }
    }

    // accumulate pair contributions
    for (size_t ip = 0; ip < pairs.size(); ++ip) {
      const auto& pr = pairs[ip];
      const int ami = std::abs(pr.mi), amj = std::abs(pr.mj);
      const double pi_v = p[RealSphericalHarmonics::packed_index(pr.li, ami)];
      const double dpi = dp[RealSphericalHarmonics::packed_index(pr.li, ami)];
      const double pj = p[RealSphericalHarmonics::packed_index(pr.lj, amj)];
      const int ti = phi_type(pr.mi);
      const int tj = phi_type(pr.mj);
      // d/dphi of the basis trig factor: cos -> -m sin, sin -> m cos
      const int tflip = pr.mi == 0 ? 0 : (pr.mi > 0 ? ti + 1 : ti - 1);
      const double mfac = pr.mi == 0 ? 0.0 : (pr.mi > 0 ? -ami : ami);
      const double qi = pi_v / s;
      for (int f = 0; f < kNumFields; ++f) {
        const size_t base = (static_cast<size_t>(f) * n_types + ti) * n_types + tj;
        const size_t base_flip =
            (static_cast<size_t>(f) * n_types + tflip) * n_types + tj;
        const double v = dpi * stheta[base] + mfac * qi * sphic[base_flip];
        acc[ip][f] += wt * v * pj;
      }
    }
  }

  // build sparse matrices, pruning entries at roundoff level
  for (int f = 0; f < kNumFields; ++f) {
    double vmax = 0.0;
    for (size_t ip = 0; ip < pairs.size(); ++ip)
      vmax = std::max(vmax, std::abs(acc[ip][f]));
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(pairs.size() / 4);
    for (size_t ip = 0; ip < pairs.size(); ++ip)
      if (std::abs(acc[ip][f]) > 1e-13 * vmax)
        trip.emplace_back(pairs[ip].i, pairs[ip].j, acc[ip][f]);
    tab->conv[f].resize(n, n);
    tab->conv[f].setFromTriplets(trip.begin(), trip.end());
    tab->conv[f].makeCompressed();
  }
  return tab;
}

std::shared_ptr<const OperatorTables> tables_for(int l_max) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const OperatorTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l_max);
  if (it != cache.end()) return it->second;
  auto tab = assemble_tables(l_max);
  cache[l_max] = tab;
  return tab;
}

// Orthonormal frame whose third column is the easy axis.
struct Frame {
  Vec3 u, v, n;
  Vec3 to_easy(const Vec3& a) const { return {dot(u, a), dot(v, a), dot(n, a)}; }
  Vec3 to_lab(const Vec3& a) const { return u * a.x + v * a.y + n * a.z; }
};

Frame make_frame(const Vec3& n) {
  const Vec3 helper = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 u = normalized(cross(helper, n));
  const Vec3 v = cross(n, u);
  return {u, v, n};
}

}  // namespace

NeelCoefficients neel_coefficients(const ParticleParams& params, double alpha_k,
                                   double gyromagnetic_ratio, double damping) {
  if (!(gyromagnetic_ratio > 0.0))
    throw ValidationError("fp: gyromagnetic ratio must be > 0");
  if (damping < 0.0) throw ValidationError("fp: damping must be >= 0");
  if (alpha_k < 0.0) throw ValidationError("fp: alpha_K must be >= 0");

  const double gt = gyromagnetic_ratio / (1.0 + damping * damping);
  const double kbt_over_m0 =
      k_boltzmann * params.temperature / params.moment_magnitude();
  NeelCoefficients c;
  c.alpha1 = mu0 * gt;
  c.alpha2 = mu0 * gt * damping;
  c.alpha3 = 2.0 * gt * alpha_k * kbt_over_m0;
  c.alpha4 = c.alpha3 * damping;
  c.inv_two_tau = gt * damping * kbt_over_m0;
  return c;
}

// ---------------------------------------------------------------------------
// SphericalHarmonicState
// ---------------------------------------------------------------------------

SphericalHarmonicState SphericalHarmonicState::uniform(int l_sph) {
  SphericalHarmonicState st;
  st.l_sph = l_sph;
  st.coeffs.assign(static_cast<size_t>(l_sph + 1) * (l_sph + 1), 0.0);
  st.coeffs[0] = 1.0 / std::sqrt(4.0 * pi);
  return st;
}

double SphericalHarmonicState::total_mass() const {
  return std::sqrt(4.0 * pi) * coeffs[0];
}

Vec3 SphericalHarmonicState::moment() const {
  if (l_sph < 1) return {0, 0, 0};
  const double f = std::sqrt(4.0 * pi / 3.0);
  return {f * coeffs[RealSphericalHarmonics::index(1, 1)],
          f * coeffs[RealSphericalHarmonics::index(1, -1)],
          f * coeffs[RealSphericalHarmonics::index(1, 0)]};
}

double SphericalHarmonicState::tail_energy_fraction() const {
  double tail = 0.0, total = 0.0;
  for (int l = 1; l <= l_sph; ++l)
    for (int m = -l; m <= l; ++m) {
      const double c = coeffs[RealSphericalHarmonics::index(l, m)];
      total += c * c;
      if (l >= l_sph - 1) tail += c * c;
    }
  return total > 0.0 ? tail / total : 0.0;
}

std::vector<double> SphericalHarmonicState::pdf_on_grid(
    const std::vector<double>& cos_thetas, int n_phi) const {
  const RealSphericalHarmonics sh(l_sph);
  std::vector<double> vals;
  std::vector<double> out;
  out.reserve(cos_thetas.size() * n_phi);
  for (double x : cos_thetas)
    for (int jp = 0; jp < n_phi; ++jp) {
      sh.values(x, 2.0 * pi * jp / n_phi, vals);
      double acc = 0.0;
      for (size_t i = 0; i < vals.size(); ++i) acc += vals[i] * coeffs[i];
      out.push_back(acc);
    }
  return out;
}

// ---------------------------------------------------------------------------
// FpSolver
// ---------------------------------------------------------------------------

struct FpSolver::Impl {
  ParticleParams params;
  FpOptions opts;
  double alpha_k;
  NeelCoefficients coeff;
  Frame frame;
  std::shared_ptr<const OperatorTables> tab;
  SpMat mx, my, mz, manis;
  Vec diffusion;  // diagonal rate, already negated: -l(l+1)/(2 tau)
  int n = 0;

  Vec apply(double hx, double hy, double hz, const Vec& v) const {
    Vec out = diffusion.cwiseProduct(v);
    out += manis * v;
    if (hx != 0.0) out += hx * (mx * v);
    if (hy != 0.0) out += hy * (my * v);
    if (hz != 0.0) out += hz * (mz * v);
    return out;
  }

  SpMat system_matrix(const Vec3& h) const {
    SpMat j = manis;
    if (h.x != 0.0) j += h.x * mx;
    if (h.y != 0.0) j += h.y * my;
    if (h.z != 0.0) j += h.z * mz;
    SpMat d(n, n);
    d.setIdentity();
    for (int i = 0; i < n; ++i) d.coeffRef(i, i) = diffusion[i];
    return SpMat(j + d);
  }

  // Linearly implicit second-order Rosenbrock W-step integration of
  // dc/dt = A(t) c from t0 to t1, recording states at the given instants.
  void integrate(Vec& c, double t0, double t1,
                 const std::function<Vec3(double)>& field_easy,
                 const std::vector<double>& record_at,
                 std::vector<Vec3>* moments, double h_max = 0.0) const {
    static constexpr double gamma = 1.7071067811865475;  // 1 + 1/sqrt(2)
    const double span = t1 - t0;
    if (!(span > 0.0)) throw ValidationError("fp: empty integration window");
    if (!(h_max > 0.0)) h_max = span;

    Eigen::SparseLU<SpMat> lu;
    double h_fact = -1.0;
    Vec3 field_fact;
    double field_scale = 0.0;
    bool have_factor = false;

    const auto refactor = [&](double t, double h) {
      const Vec3 hh = field_easy(t);
      SpMat w = system_matrix(hh);
      w *= -gamma * h;
      for (int i = 0; i < n; ++i) w.coeffRef(i, i) += 1.0;
      w.makeCompressed();
      lu.compute(w);
      if (lu.info() != Eigen::Success)
        throw NumericalError("fp: sparse factorization failed");
      h_fact = h;
      field_fact = hh;
      have_factor = true;
    };

    double t = t0;
    double h = std::min(span / 256.0, h_max);
    size_t rec = 0;
    // record t0 if requested
    while (rec < record_at.size() && record_at[rec] <= t0 + 1e-30) {
      if (moments) moments->push_back(state_moment(c));
      ++rec;
    }

    int safety = 0;
    while (t < t1 - 1e-30 * span) {
      const double t_next = rec < record_at.size() ? record_at[rec] : t1;
      h = std::min({h, h_max, t_next - t});
      const Vec3 hf = field_easy(t);
      field_scale = std::max(field_scale, hf.norm());
      if (!have_factor || std::abs(h - h_fact) > 0.2 * h_fact ||
          (hf - field_fact).norm() > 0.05 * field_scale + 1e-300)
        refactor(t, h);

      const Vec f1 = apply(hf.x, hf.y, hf.z, c);
      const Vec k1 = lu.solve(f1);
      const Vec3 hf2 = field_easy(t + h);
      const Vec f2 = apply(hf2.x, hf2.y, hf2.z, c + h * k1);
      const Vec k2 = lu.solve(f2 - 2.0 * k1);
      const Vec cn = c + h * (1.5 * k1 + 0.5 * k2);
      const Vec diff = 0.5 * h * (k1 + k2);

      double err2 = 0.0;
      for (int i = 0; i < n; ++i) {
        const double w = opts.abs_tol +
                         opts.rel_tol * std::max(std::abs(c[i]), std::abs(cn[i]));
        const double e = diff[i] / w;
        err2 += e * e;
      }
      const double err = std::sqrt(err2 / n);

      if (err <= 1.0) {
        t += h;
        c = cn;
        if (rec < record_at.size() && t >= record_at[rec] - 1e-30 * span) {
          if (moments) moments->push_back(state_moment(c));
          ++rec;
        }
        h *= std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.5), 0.3, 4.0);
      } else {
        h *= std::clamp(0.9 * std::pow(err, -0.5), 0.1, 0.5);
        have_factor = false;
      }
      if (h < 1e-15 * span) {
        std::ostringstream os;
        os << "fp: integrator step underflow at t = " << t;
        throw NumericalError(os.str());
      }
      if (++safety > 50'000'000)
        throw NumericalError("fp: step budget exhausted");
    }
    while (rec < record_at.size()) {
      if (moments) moments->push_back(state_moment(c));
      ++rec;
    }
  }

  Vec3 state_moment(const Vec& c) const {
    const double f = std::sqrt(4.0 * pi / 3.0);
    return {f * c[RealSphericalHarmonics::index(1, 1)],
            f * c[RealSphericalHarmonics::index(1, -1)],
            f * c[RealSphericalHarmonics::index(1, 0)]};
  }
};

FpSolver::FpSolver(const ParticleParams& params, double alpha_k, const Vec3& easy_axis,
                   const FpOptions& opts)
    : impl_(std::make_unique<Impl>()) {
  if (opts.l_sph < 10) throw ValidationError("fp: degree cutoff must be >= 10");
  if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0))
    throw ValidationError("fp: tolerances must be > 0");
  if (std::abs(easy_axis.squared_norm() - 1.0) > 2.5e-12)
    throw ValidationError("fp: easy axis must be a unit vector");

  impl_->params = params;
  impl_->opts = opts;
  impl_->alpha_k = alpha_k;
  impl_->coeff =
      neel_coefficients(params, alpha_k, opts.gyromagnetic_ratio, opts.damping);
  impl_->frame = make_frame(easy_axis);
  impl_->tab = tables_for(opts.l_sph);
  impl_->n = (opts.l_sph + 1) * (opts.l_sph + 1);

  const auto& c = impl_->coeff;
  const auto& t = *impl_->tab;
  impl_->mx = c.alpha1 * t.conv[kPrecX] + c.alpha2 * t.conv[kAlignX];
  impl_->my = c.alpha1 * t.conv[kPrecY] + c.alpha2 * t.conv[kAlignY];
  impl_->mz = c.alpha1 * t.conv[kPrecZ] + c.alpha2 * t.conv[kAlignZ];
  impl_->manis = c.alpha3 * t.conv[kPrecAnis] + c.alpha4 * t.conv[kAlignAnis];
  impl_->diffusion = -c.inv_two_tau * t.laplace;
}

FpSolver::~FpSolver() = default;
FpSolver::FpSolver(FpSolver&&) noexcept = default;
FpSolver& FpSolver::operator=(FpSolver&&) noexcept = default;

const NeelCoefficients& FpSolver::coefficients() const { return impl_->coeff; }

SphericalHarmonicState FpSolver::evolve(const std::function<Vec3(double)>& field_lab,
                                        double t0, double t1,
                                        const SphericalHarmonicState* start) const {
  Vec c;
  if (start) {
    if (static_cast<int>(start->coeffs.size()) != impl_->n)
      throw ValidationError("fp: start state has the wrong degree");
    c = Eigen::Map<const Vec>(start->coeffs.data(), impl_->n);
  } else {
    const auto u = SphericalHarmonicState::uniform(impl_->opts.l_sph);
    c = Eigen::Map<const Vec>(u.coeffs.data(), impl_->n);
  }
  const auto field_easy = [&](double t) { return impl_->frame.to_easy(field_lab(t)); };
  impl_->integrate(c, t0, t1, field_easy, {}, nullptr);

  SphericalHarmonicState out;
  out.l_sph = impl_->opts.l_sph;
  out.time = t1;
  out.coeffs.assign(c.data(), c.data() + impl_->n);
  return out;
}

MomentTrace FpSolver::solve_periodic(const FieldSequence& seq, const Vec3& x) const {
  const double period = seq.period();
  const int n_samples = seq.samples_per_period();
  const double dt = 1.0 / seq.sample_rate();
  const int warmup = std::max(0, impl_->opts.warmup_periods);

  const auto field_easy = [&](double t) {
    return impl_->frame.to_easy(applied_field(seq, x, t));
  };

  // Cap the warm-up step at a fraction of the fastest drive cycle so the
  // trajectory is resolved even before record clipping kicks in.
  const double f_max = std::max(seq.f_x(), seq.f_y());
  const double h_cap = 0.1 / f_max;

  const auto u = SphericalHarmonicState::uniform(impl_->opts.l_sph);
  Vec c = Eigen::Map<const Vec>(u.coeffs.data(), impl_->n);
  if (warmup > 0)
    impl_->integrate(c, 0.0, warmup * period, field_easy, {}, nullptr, h_cap);

  std::vector<double> record(n_samples);
  for (int j = 0; j < n_samples; ++j) record[j] = warmup * period + j * dt;
  std::vector<Vec3> moments;
  moments.reserve(n_samples);
  impl_->integrate(c, warmup * period, warmup * period + period, field_easy, record,
                   &moments, h_cap);

  MomentTrace trace;
  trace.dt = dt;
  trace.samples.resize(n_samples);
  const double m0 = impl_->params.moment_magnitude();
  for (int j = 0; j < n_samples; ++j)
    trace.samples[j] = impl_->frame.to_lab(moments[j]) * m0;

  SphericalHarmonicState fin;
  fin.l_sph = impl_->opts.l_sph;
  fin.coeffs.assign(c.data(), c.data() + impl_->n);
  trace.resolution_warning = fin.tail_energy_fraction() > 1e-6;
  return trace;
}

MomentTrace fp_solve(const FieldSequence& seq, const Vec3& x, const Vec3& easy_axis,
                     double alpha_k, const ParticleParams& params,
                     const FpOptions& opts) {
  return FpSolver(params, alpha_k, easy_axis, opts).solve_periodic(seq, x);
}

}  // namespace eqanis
