#pragma once

#include <functional>
#include <vector>

namespace eqanis {

struct QuadResult {
  double value;
  double error_estimate;
  int subintervals;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over [lo, hi]. Bisects the
/// interval with the largest error estimate until the total estimate drops
/// below max(abs_tol, rel_tol * |integral|); throws NumericalError when the
/// subdivision budget (10^4 intervals) is exhausted first.
QuadResult integrate_gk15(const std::function<double(double)>& f, double lo, double hi,
                          double abs_tol, double rel_tol = 0.0);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace eqanis
