#include "islog/simplex_lp.hpp"

#include <cmath>
#include <vector>

namespace islog {

// Phase-1 simplex on the tableau [A | I | b] with artificial basis. Bland's
// rule for both the entering and leaving choices, so cycling cannot occur.
FeasibilityResult lp_feasible(const Matrix& a, std::vector<double> b, double tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t width = n + m + 1;  // structural + artificial + rhs
  constexpr double kPivotEps = 1e-11;

  std::vector<std::vector<double>> t(m, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a(i, j);
    t[i][n + i] = 1.0;
    t[i][width - 1] = sign * b[i];
    basis[i] = n + i;
  }

  // Reduced-cost row for minimizing the artificial sum: d_j = -sum_i t[i][j]
  // over structural columns; artificials start basic with cost 0 reduced.
  std::vector<double> cost(width, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  double obj = 0.0;
  for (std::size_t i = 0; i < m; ++i) obj += t[i][width - 1];

  const std::size_t max_iter = 2000 * (m + n) + 10000;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    // Entering: smallest index with a negative reduced cost (Bland).
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    // Leaving: minimum ratio, ties toward the smallest basis label (Bland).
    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= kPivotEps) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // cannot happen for the bounded phase-1 objective

    const double piv = t[leave][enter];
    for (std::size_t j = 0; j < width; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const double cf = cost[enter];
    if (cf != 0.0)
      for (std::size_t j = 0; j < width; ++j) cost[j] -= cf * t[leave][j];
    basis[leave] = enter;
  }

  obj = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) obj += t[i][width - 1];

  FeasibilityResult res;
  res.phase1_objective = obj;
  res.feasible = obj <= tol;
  return res;
}

}  // namespace islog
