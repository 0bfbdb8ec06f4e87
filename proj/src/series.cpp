#include "eqanis/series.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "eqanis/bessel.hpp"
#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"
#include "eqanis/laguerre.hpp"

namespace eqanis {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Below this anisotropy the Laguerre argument -b^2/(4c) degenerates and the
// series coefficients switch to the direct Cauchy-product sums, which stay
// finite down to c = 0.
constexpr double small_c = 1e-8;
constexpr double small_alpha_k = 1e-8;

// Streaming sum of positive terms given in the log domain.
struct LogSum {
  double max_log = neg_inf;
  double scaled = 0.0;

  void add(double lt) {
    if (lt == neg_inf) return;
    if (lt > max_log) {
      scaled = scaled * std::exp(max_log - lt) + 1.0;
      max_log = lt;
    } else {
      scaled += std::exp(lt - max_log);
    }
  }
  double log() const { return max_log + std::log(scaled); }
};

// log sum_k exp(terms[k]) for a short positive sequence.
double log_sum_exp(const std::vector<double>& t) {
  LogSum s;
  for (double v : t) s.add(v);
  return s.log();
}

// Direct coefficients d_l = sum_k b^{2k} c^{l-k} / ((2k)! (l-k)!) and the
// analogous e_l/b, in the log domain. Stable for any b and all c >= 0.
void direct_coefficients(double b, double c, int count, std::vector<double>& log_d,
                         std::vector<double>& log_e_over_b) {
  const double lb2 = b == 0.0 ? neg_inf : 2.0 * std::log(std::abs(b));
  const double lc = c == 0.0 ? neg_inf : std::log(c);
  log_d.resize(count);
  log_e_over_b.resize(count);
  std::vector<double> td, te;
  for (int l = 0; l < count; ++l) {
    td.clear();
    te.clear();
    for (int k = 0; k <= l; ++k) {
      if (b == 0.0 && k > 0) break;
      if (c == 0.0 && k < l) continue;
      const double base = (k == 0 ? 0.0 : k * lb2) + (l == k ? 0.0 : (l - k) * lc) -
                          std::lgamma(l - k + 1.0);
      td.push_back(base - std::lgamma(2.0 * k + 1.0));
      te.push_back(base - std::lgamma(2.0 * k + 2.0));
    }
    log_d[l] = td.empty() ? neg_inf : log_sum_exp(td);
    log_e_over_b[l] = te.empty() ? neg_inf : log_sum_exp(te);
  }
}

// Per-term coefficients of the three series, normalized so that
//   Z    = 4 pi e^a * sum_l exp(w[l] + logB[l])
//   z3   = 4 pi e^a * b * sum_l exp(v[l] + logB[l+1])
//   z_i  = 4 pi e^a * beta*H_i * sum_l exp(w[l] + logB[l+1]).
void series_coefficients(const SeriesParams& p, int count, std::vector<double>& w,
                         std::vector<double>& v) {
  w.resize(count);
  v.resize(count);
  if (p.c >= small_c) {
    const double t = -p.b * p.b / (4.0 * p.c);
    const auto lag_m = laguerre_log_terms(-0.5, t, count);
    const auto lag_p = laguerre_log_terms(+0.5, t, count);
    const double l2c = std::log(2.0 * p.c);
    const double base = 0.5 * std::log(pi / 2.0);
    for (int l = 0; l < count; ++l) {
      w[l] = base + l * l2c + lag_m[l].log_abs;
      v[l] = base + l * l2c + lag_p[l].log_abs;
    }
  } else {
    std::vector<double> log_d, log_e;
    direct_coefficients(p.b, p.c, count, log_d, log_e);
    const double l2 = std::log(2.0);
    for (int l = 0; l < count; ++l) {
      w[l] = log_d[l] + (l - 0.5) * l2 + std::lgamma(l + 0.5);
      v[l] = log_e[l] + (l + 0.5) * l2 + std::lgamma(l + 1.5);
    }
  }
}

SeriesResult eval_series_impl(const SeriesParams& p, double tol, int l_max,
                              bool adaptive) {
  if (!(p.a >= 0.0)) throw ValidationError("series: a must be >= 0");
  if (!(p.c >= 0.0)) throw ValidationError("series: c must be >= 0");
  if (adaptive && !(tol > 0.0)) throw ValidationError("series: tolerance must be > 0");
  if (l_max < 1 || l_max > series_max_cap)
    throw ValidationError("series: term cap outside [1, 256]");

  const auto log_b = log_scaled_bessel_half_orders(p.a, l_max + 1);
  std::vector<double> w, v;
  series_coefficients(p, l_max, w, v);

  const double log_tol = adaptive ? std::log(tol) : 0.0;
  LogSum sz, s3, s12;
  int consecutive_small = 0;
  int used = 0;
  double last_rel = 0.0;
  for (int l = 0; l < l_max; ++l) {
    const double tz = w[l] + log_b[l];
    const double t3 = v[l] + log_b[l + 1];
    const double t12 = w[l] + log_b[l + 1];
    sz.add(tz);
    s3.add(t3);
    s12.add(t12);
    used = l + 1;
    if (!adaptive) continue;
    const double rz = tz - sz.log();
    const double r3 = t3 - s3.log();
    const double r12 = t12 - s12.log();
    last_rel = std::exp(std::max({rz, r3, r12}));
    const bool small = rz < log_tol && r3 < log_tol && r12 < log_tol;
    consecutive_small = small ? consecutive_small + 1 : 0;
    if (consecutive_small >= 3) break;
  }
  if (adaptive && consecutive_small < 3)
    throw SeriesConvergenceError("series: no convergence within the term cap",
                                 last_rel);

  SeriesResult r;
  r.log_z = std::log(4.0 * pi) + p.a + sz.log();
  r.moment_parallel = p.b * std::exp(s3.log() - sz.log());
  r.moment_perp_coeff = std::exp(s12.log() - sz.log());
  r.terms_used = used;
  return r;
}

}  // namespace

double SeriesResult::partition() const { return std::exp(log_z); }

double langevin(double xi) {
  const double ax = std::abs(xi);
  if (ax < 1e-3) {
    const double x2 = xi * xi;
    return xi * (1.0 / 3.0 - x2 / 45.0 + 2.0 * x2 * x2 / 945.0);
  }
  return 1.0 / std::tanh(xi) - 1.0 / xi;
}

SeriesResult eval_series(const SeriesParams& p, double tol, int l_max) {
  return eval_series_impl(p, tol, l_max, true);
}

SeriesResult eval_series_fixed(const SeriesParams& p, int terms) {
  return eval_series_impl(p, 0.0, terms, false);
}

Vec3 mean_moment(const Vec3& field, const Vec3& easy_axis, double alpha_k,
                 const ParticleParams& params, double tol, int l_max) {
  return normalized_moment(field, easy_axis, alpha_k, params, tol, l_max) *
         params.moment_magnitude();
}

Vec3 normalized_moment(const Vec3& field, const Vec3& easy_axis, double alpha_k,
                       const ParticleParams& params, double tol, int l_max) {
  if (!(tol > 0.0)) throw ValidationError("moment: tolerance must be > 0");
  if (std::abs(easy_axis.squared_norm() - 1.0) > 2.5e-12)
    throw ValidationError("moment: easy axis must be a unit vector");

  const double beta = params.beta();
  if (alpha_k < small_alpha_k) {
    const double h = field.norm();
    if (h == 0.0) return {0, 0, 0};
    return field * (langevin(beta * h) / h);
  }

  const double h3 = dot(easy_axis, field);
  const Vec3 perp = field - easy_axis * h3;
  const SeriesParams p{beta * perp.norm(), beta * h3, alpha_k};
  const SeriesResult r = eval_series(p, tol, l_max);
  return easy_axis * r.moment_parallel + perp * (beta * r.moment_perp_coeff);
}

}  // namespace eqanis
