#include "islog/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "islog/errors.hpp"
#include "islog/tolerances.hpp"

namespace islog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Upper concave chain of an x-sorted point sequence. Interior vertices where
// the turn is collinear or convex (cross >= -kGeomTol) are absorbed; this is
// both the collinear merge and the hull step.
std::vector<Point> upper_chain(const std::vector<Point>& pts) {
  std::vector<Point> chain;
  chain.reserve(pts.size());
  for (const Point& p : pts) {
    if (!chain.empty() && std::abs(p.x - chain.back().x) <= 1e-15 &&
        std::abs(p.y - chain.back().y) <= 1e-15)
      continue;
    while (chain.size() >= 2 &&
           cross(chain[chain.size() - 2], chain.back(), p) >= -kGeomTol)
      chain.pop_back();
    chain.push_back(p);
  }
  return chain;
}

std::vector<std::string> default_hyp_labels(std::size_t d) {
  std::vector<std::string> out;
  out.reserve(d);
  for (std::size_t e = 0; e < d; ++e) out.push_back("e" + std::to_string(e + 1));
  return out;
}

}  // namespace

double LikelihoodVector::ratio() const { return p_not_e > 0.0 ? p_e / p_not_e : kInf; }

CanonicalCurve CanonicalCurve::from_vertices(std::vector<Point> pts) {
  if (pts.size() < 2) fail(Errc::InvalidCurve, "need at least two vertices");
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Point> v = upper_chain(pts);

  if (v.size() < 2) fail(Errc::InvalidCurve, "degenerate vertex set");
  if (std::abs(v.front().x) > kGeomTol || std::abs(v.front().y) > kGeomTol)
    fail(Errc::InvalidCurve, "first vertex is not (0,0)");
  if (std::abs(v.back().x - 1.0) > kGeomTol || std::abs(v.back().y - 1.0) > kGeomTol)
    fail(Errc::InvalidCurve, "last vertex is not (1,1)");
  v.front() = {0.0, 0.0};
  v.back() = {1.0, 1.0};
  for (Point& p : v) {
    p.x = std::min(std::max(p.x, 0.0), 1.0);
    p.y = std::min(std::max(p.y, 0.0), 1.0);
  }
  for (const Point& p : v)
    if (p.y < p.x - 1e-12) fail(Errc::InvalidCurve, "vertex below the diagonal");
  return CanonicalCurve(std::move(v));
}

CanonicalCurve CanonicalCurve::diagonal() {
  return CanonicalCurve({{0.0, 0.0}, {1.0, 1.0}});
}

double CanonicalCurve::eval(double x) const {
  x = std::min(std::max(x, 0.0), 1.0);
  // Last vertex with v.x <= x; with a vertical first segment this lands on
  // the top of the vertical at x = 0.
  std::size_t i = 0;
  for (std::size_t k = 1; k < v_.size(); ++k) {
    if (v_[k].x <= x) i = k;
    else break;
  }
  if (i + 1 == v_.size()) return v_.back().y;
  const Point& a = v_[i];
  const Point& b = v_[i + 1];
  const double dx = b.x - a.x;
  if (dx <= 1e-15) return std::max(a.y, b.y);
  return a.y + (b.y - a.y) * (x - a.x) / dx;
}

std::vector<double> CanonicalCurve::slopes() const {
  std::vector<double> out;
  out.reserve(n_segments());
  for (std::size_t k = 1; k < v_.size(); ++k) {
    const double dx = v_[k].x - v_[k - 1].x;
    const double dy = v_[k].y - v_[k - 1].y;
    out.push_back(dx > 0.0 ? dy / dx : kInf);
  }
  return out;
}

CanonicalCurve canonicalize(const InfoSystem& p) {
  if (!p.binary())
    fail(Errc::NotBinary,
         "canonical curves need exactly 2 hypotheses, got " + std::to_string(p.n_hypotheses()));
  const auto prior = p.joint().row_sums();
  std::vector<LikelihoodVector> ts;
  ts.reserve(p.n_observations());
  for (std::size_t i = 0; i < p.n_observations(); ++i) {
    const LikelihoodVector t{p.joint()(0, i) / prior[0], p.joint()(1, i) / prior[1]};
    if (t.p_e <= 0.0 && t.p_not_e <= 0.0) continue;  // zero-probability observation
    ts.push_back(t);
  }
  // Decreasing likelihood ratio; cross-multiplied to keep infinite ratios
  // (p_not_e = 0) first without special cases.
  std::stable_sort(ts.begin(), ts.end(), [](const LikelihoodVector& a, const LikelihoodVector& b) {
    return a.p_e * b.p_not_e > b.p_e * a.p_not_e;
  });
  std::vector<Point> pts;
  pts.reserve(ts.size() + 1);
  pts.push_back({0.0, 0.0});
  double x = 0.0, y = 0.0;
  for (const auto& t : ts) {
    x += t.p_not_e;
    y += t.p_e;
    pts.push_back({x, y});
  }
  return CanonicalCurve::from_vertices(std::move(pts));
}

InfoSystem reconstruct(const CanonicalCurve& c, const Distribution& prior,
                       std::vector<std::string> hypothesis_labels) {
  if (prior.size() != 2) fail(Errc::DimensionMismatch, "prior must cover 2 hypotheses");
  if (prior[0] <= 0.0 || prior[1] <= 0.0)
    fail(Errc::DegeneratePrior, "prior must be strictly positive");
  const auto& v = c.vertices();
  const std::size_t k = v.size() - 1;
  Matrix joint(2, k);
  std::vector<std::string> obs;
  obs.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    const double dy = std::max(v[s + 1].y - v[s].y, 0.0);
    const double dx = std::max(v[s + 1].x - v[s].x, 0.0);
    joint(0, s) = prior[0] * dy;
    joint(1, s) = prior[1] * dx;
    obs.push_back("s" + std::to_string(s + 1));
  }
  if (hypothesis_labels.empty()) hypothesis_labels = default_hyp_labels(2);
  return InfoSystem(std::move(hypothesis_labels), std::move(obs), std::move(joint));
}

CanonicalCurve join(const CanonicalCurve& a, const CanonicalCurve& b) {
  std::vector<Point> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return CanonicalCurve::from_vertices(std::move(pts));
}

CanonicalCurve meet(const CanonicalCurve& a, const CanonicalCurve& b) {
  // Candidate x-coordinates: all vertices plus pairwise segment crossings.
  std::vector<double> xs;
  for (const Point& p : a.vertices()) xs.push_back(p.x);
  for (const Point& p : b.vertices()) xs.push_back(p.x);
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  for (std::size_t i = 1; i < va.size(); ++i) {
    const double ax0 = va[i - 1].x, ax1 = va[i].x;
    if (ax1 - ax0 <= 1e-15) continue;
    const double sa = (va[i].y - va[i - 1].y) / (ax1 - ax0);
    const double ca = va[i - 1].y - sa * ax0;
    for (std::size_t j = 1; j < vb.size(); ++j) {
      const double bx0 = vb[j - 1].x, bx1 = vb[j].x;
      if (bx1 - bx0 <= 1e-15) continue;
      const double sb = (vb[j].y - vb[j - 1].y) / (bx1 - bx0);
      if (std::abs(sa - sb) <= 1e-15) continue;
      const double cb = vb[j - 1].y - sb * bx0;
      const double x = (cb - ca) / (sa - sb);
      if (x >= std::max(ax0, bx0) - 1e-12 && x <= std::min(ax1, bx1) + 1e-12)
        xs.push_back(std::min(std::max(x, 0.0), 1.0));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](double u, double v) { return std::abs(u - v) <= 1e-13; }),
           xs.end());

  std::vector<Point> pts;
  pts.push_back({0.0, 0.0});
  const double y0 = std::min(a.eval(0.0), b.eval(0.0));
  if (y0 > kGeomTol) pts.push_back({0.0, y0});  // both curves start vertical
  for (double x : xs) {
    if (x <= 1e-13) continue;
    pts.push_back({x, std::min(a.eval(x), b.eval(x))});
  }
  return CanonicalCurve::from_vertices(std::move(pts));
}

bool dominates(const CanonicalCurve& a, const CanonicalCurve& b) {
  for (const Point& p : b.vertices())
    if (p.y > a.eval(p.x) + kGeomTol) return false;
  return true;
}

bool curve_equal(const CanonicalCurve& a, const CanonicalCurve& b) {
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  if (va.size() == vb.size()) {
    bool same = true;
    for (std::size_t i = 0; i < va.size() && same; ++i)
      same = std::abs(va[i].x - vb[i].x) <= kGeomTol && std::abs(va[i].y - vb[i].y) <= kGeomTol;
    if (same) return true;
  }
  return dominates(a, b) && dominates(b, a);
}

InfoSystem perfect(const Distribution& prior, std::vector<std::string> hypothesis_labels) {
  const std::size_t d = prior.size();
  for (std::size_t e = 0; e < d; ++e)
    if (prior[e] <= 0.0) fail(Errc::DegeneratePrior, "prior must be strictly positive");
  Matrix joint(d, d);
  std::vector<std::string> obs;
  for (std::size_t e = 0; e < d; ++e) {
    joint(e, e) = prior[e];
    obs.push_back("o" + std::to_string(e + 1));
  }
  if (hypothesis_labels.empty()) hypothesis_labels = default_hyp_labels(d);
  return InfoSystem(std::move(hypothesis_labels), std::move(obs), std::move(joint));
}

InfoSystem null_system(const Distribution& prior, std::size_t n_obs,
                       std::vector<std::string> hypothesis_labels) {
  const std::size_t d = prior.size();
  for (std::size_t e = 0; e < d; ++e)
    if (prior[e] <= 0.0) fail(Errc::DegeneratePrior, "prior must be strictly positive");
  if (n_obs < 1) fail(Errc::EmptyAxis, "need at least 1 observation");
  Matrix joint(d, n_obs);
  std::vector<std::string> obs;
  for (std::size_t i = 0; i < n_obs; ++i) obs.push_back("o" + std::to_string(i + 1));
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t i = 0; i < n_obs; ++i) joint(e, i) = prior[e] / static_cast<double>(n_obs);
  if (hypothesis_labels.empty()) hypothesis_labels = default_hyp_labels(d);
  return InfoSystem(std::move(hypothesis_labels), std::move(obs), std::move(joint));
}

}  // namespace islog
