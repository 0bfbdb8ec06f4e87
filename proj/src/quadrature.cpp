#include "eqanis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "eqanis/constants.hpp"
#include "eqanis/errors.hpp"

namespace eqanis {

namespace {

// 15-point Kronrod nodes (positive half) with Kronrod weights, plus the
// embedded 7-point Gauss weights on the odd-indexed nodes.
constexpr double xk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                          0.417959183673469};

struct Interval {
  double lo, hi, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double resk = wk[7] * fc;
  double resg = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double fv = f(c - h * xk[i]) + f(c + h * xk[i]);
    resk += wk[i] * fv;
    if (i % 2 == 1) resg += wg[i / 2] * fv;
  }
  const double value = resk * h;
  const double err = std::abs((resk - resg) * h) * 1.5;
  return {lo, hi, value, err};
}

}  // namespace

QuadResult integrate_gk15(const std::function<double(double)>& f, double lo, double hi,
                          double abs_tol, double rel_tol) {
  if (!(abs_tol > 0.0) && !(rel_tol > 0.0))
    throw ValidationError("quadrature: need a positive tolerance");
  constexpr int budget = 10000;

  std::priority_queue<Interval> queue;
  queue.push(gk15(f, lo, hi));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int n = 1;

  while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
    if (n >= budget)
      throw NumericalError("quadrature: subdivision budget exhausted");
    const Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Interval left = gk15(f, worst.lo, mid);
    const Interval right = gk15(f, mid, worst.hi);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++n;
  }
  return {total_value, total_error, n};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw ValidationError("gauss_legendre: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

}  // namespace eqanis
