#pragma once

// Shared generators and independent oracles for the test suites. The
// oracles deliberately avoid the library's computation paths: the hull is
// gift-wrapped instead of monotone-chained, H values are summed straight
// off the joint, and polyline evaluation is re-implemented here.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "islog/canonical.hpp"
#include "islog/distribution.hpp"
#include "islog/info_system.hpp"
#include "islog/matrix.hpp"
#include "islog/rng.hpp"

namespace testsup {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// --- generators -------------------------------------------------------------

inline islog::Distribution rand_dist(islog::Rng& rng, std::size_t d) {
  std::vector<double> p(d);
  double s = 0.0;
  for (double& v : p) {
    v = rng.expo();
    s += v;
  }
  for (double& v : p) v /= s;
  return islog::Distribution(std::move(p));
}

inline std::vector<std::string> obs_labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back("o" + std::to_string(i + 1));
  return out;
}

inline std::vector<std::string> hyp_labels(std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t e = 0; e < d; ++e) out.push_back("e" + std::to_string(e + 1));
  return out;
}

// Random system with strictly positive entries and a random prior.
inline islog::InfoSystem rand_is(islog::Rng& rng, std::size_t d, std::size_t m) {
  islog::Matrix joint(d, m);
  double total = 0.0;
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t i = 0; i < m; ++i) {
      joint(e, i) = rng.expo();
      total += joint(e, i);
    }
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t i = 0; i < m; ++i) joint(e, i) /= total;
  return islog::InfoSystem(hyp_labels(d), obs_labels(m), std::move(joint));
}

// Random binary system carrying the given prior exactly.
inline islog::InfoSystem rand_binary_with_prior(islog::Rng& rng, std::size_t m,
                                                const islog::Distribution& prior) {
  islog::Matrix joint(2, m);
  for (std::size_t e = 0; e < 2; ++e) {
    std::vector<double> row(m);
    double s = 0.0;
    for (double& v : row) {
      v = rng.expo();
      s += v;
    }
    for (std::size_t i = 0; i < m; ++i) joint(e, i) = prior[e] * row[i] / s;
  }
  return islog::InfoSystem(hyp_labels(2), obs_labels(m), std::move(joint));
}

inline islog::Distribution rand_binary_prior(islog::Rng& rng) {
  const double w = rng.uniform(0.1, 0.9);
  return islog::Distribution({w, 1.0 - w});
}

inline islog::Matrix rand_payoff(islog::Rng& rng, std::size_t actions, std::size_t d) {
  islog::Matrix u(actions, d);
  for (std::size_t a = 0; a < actions; ++a)
    for (std::size_t e = 0; e < d; ++e) u(a, e) = rng.uniform(-1.0, 2.0);
  return u;
}

// --- independent oracles ----------------------------------------------------

// Upper concave envelope by gift wrapping: from (0,0), repeatedly take the
// maximal-slope point ahead (farthest on slope ties, which also merges
// collinear runs). O(n^2); fixtures are tiny.
inline std::vector<islog::Point> oracle_upper_hull(const std::vector<islog::Point>& pts) {
  std::vector<islog::Point> out{{0.0, 0.0}};
  islog::Point cur{0.0, 0.0};
  while (std::abs(cur.x - 1.0) > 1e-12 || std::abs(cur.y - 1.0) > 1e-12) {
    double best_slope = -kInf, best_len = -1.0;
    islog::Point best{1.0, 1.0};
    for (const islog::Point& p : pts) {
      const double dx = p.x - cur.x, dy = p.y - cur.y;
      if (dx < -1e-12 || (dx <= 1e-12 && dy <= 1e-12)) continue;
      const double slope = dx > 1e-12 ? dy / dx : kInf;
      const double len = dx * dx + dy * dy;
      bool better = false;
      if (slope > best_slope * (1 + 1e-13) + 1e-13) better = true;
      else if (slope >= best_slope - std::abs(best_slope) * 1e-13 - 1e-13 && len > best_len)
        better = true;
      if (better) {
        best_slope = slope;
        best_len = len;
        best = p;
      }
    }
    out.push_back(best);
    cur = best;
  }
  return out;
}

// Piecewise-linear upper-boundary evaluation, written against the raw
// vertex list (no reuse of CanonicalCurve::eval).
inline double oracle_eval(const std::vector<islog::Point>& v, double x) {
  if (x <= v.front().x) {
    // account for a vertical first segment
    double y = v.front().y;
    for (std::size_t k = 0; k < v.size() && v[k].x <= x + 1e-15; ++k) y = v[k].y;
    return y;
  }
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (x <= v[k].x + 1e-15) {
      const double dx = v[k].x - v[k - 1].x;
      if (dx <= 1e-15) return std::max(v[k].y, v[k - 1].y);
      return v[k - 1].y + (v[k].y - v[k - 1].y) * (x - v[k - 1].x) / dx;
    }
  }
  return v.back().y;
}

// H(P) straight off the joint, with its own per-kind arithmetic.
enum class OracleScore { Log, Quad };

inline double oracle_h(OracleScore kind, const islog::Matrix& joint) {
  double h = 0.0;
  for (std::size_t i = 0; i < joint.cols(); ++i) {
    double m = 0.0;
    for (std::size_t e = 0; e < joint.rows(); ++e) m += joint(e, i);
    if (m <= 0.0) continue;
    if (kind == OracleScore::Log) {
      for (std::size_t e = 0; e < joint.rows(); ++e)
        if (joint(e, i) > 0.0) h += joint(e, i) * std::log(joint(e, i) / m);
    } else {
      double ss = 0.0;
      for (std::size_t e = 0; e < joint.rows(); ++e) ss += (joint(e, i) / m) * (joint(e, i) / m);
      h += m * ss;  // G_quad(p) collapses to sum of squares
    }
  }
  return h;
}

inline double oracle_h_decision(const islog::Matrix& joint, const islog::Matrix& u) {
  double h = 0.0;
  for (std::size_t i = 0; i < joint.cols(); ++i) {
    double m = 0.0;
    for (std::size_t e = 0; e < joint.rows(); ++e) m += joint(e, i);
    if (m <= 0.0) continue;
    double best = -kInf;
    for (std::size_t a = 0; a < u.rows(); ++a) {
      double v = 0.0;
      for (std::size_t e = 0; e < joint.rows(); ++e) v += (joint(e, i) / m) * u(a, e);
      best = std::max(best, v);
    }
    h += m * best;
  }
  return h;
}

inline bool points_close(const std::vector<islog::Point>& a, const std::vector<islog::Point>& b,
                         double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i].x - b[i].x) > tol || std::abs(a[i].y - b[i].y) > tol) return false;
  return true;
}

}  // namespace testsup
