#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "islog/distribution.hpp"
#include "islog/info_system.hpp"

namespace islog {

struct Point {
  double x;  // cumulative P(i | not-e)
  double y;  // cumulative P(i | e)
};

/// Per-observation conditional pair (P(i|e), P(i|not-e)). Both components
/// are nonnegative and not both zero.
struct LikelihoodVector {
  double p_e;
  double p_not_e;
  /// Likelihood ratio P(i|e)/P(i|not-e); +infinity when p_not_e = 0.
  double ratio() const;
};

/// Canonical representation of a binary-hypothesis information system: the
/// concave piecewise-linear upper boundary from (0,0) to (1,1) traced by
/// cumulative likelihood vectors sorted by decreasing likelihood ratio.
/// Axis convention: x accumulates P(i|not-e), y accumulates P(i|e); the
/// decreasing-ratio sort is what keeps the curve concave and above the
/// diagonal. Only the upper boundary is stored; the region it bounds against
/// the diagonal is shared by all curves, so join/meet/dominance lose nothing.
///
/// Invariants (enforced by the factory): first vertex (0,0), last (1,1),
/// strictly decreasing segment slopes after collinear merge (tolerance
/// kGeomTol), every vertex on or above the diagonal, no duplicate
/// consecutive vertices. At most the first segment may be vertical.
class CanonicalCurve {
 public:
  /// Sorts, merges collinear runs and duplicate points, snaps the endpoints
  /// to (0,0)/(1,1), and validates. Points below previously kept chain
  /// segments are absorbed (the input is treated as a point set whose upper
  /// concave envelope is wanted). Throws InvalidCurve on violations.
  static CanonicalCurve from_vertices(std::vector<Point> pts);

  /// The two-vertex diagonal, C(P0).
  static CanonicalCurve diagonal();

  const std::vector<Point>& vertices() const { return v_; }
  std::size_t n_segments() const { return v_.size() - 1; }

  /// Upper-boundary value at x in [0, 1]. At x = 0 with a vertical first
  /// segment this is the top of that segment.
  double eval(double x) const;

  /// Per-segment slopes, strictly decreasing; +infinity for a vertical
  /// first segment.
  std::vector<double> slopes() const;

 private:
  explicit CanonicalCurve(std::vector<Point> v) : v_(std::move(v)) {}
  std::vector<Point> v_;
};

/// C(P) for a binary-hypothesis system. Zero-probability observations are
/// dropped; equal-ratio observations merge into one segment. Throws
/// NotBinary otherwise.
CanonicalCurve canonicalize(const InfoSystem& p);

/// Inverse construction: one observation per linear segment, conditionals
/// (dy, dx), joint weighted by the given strictly positive binary prior.
/// Observation labels are synthetic s1..sk.
InfoSystem reconstruct(const CanonicalCurve& c, const Distribution& prior,
                       std::vector<std::string> hypothesis_labels = {});

/// P + Q: upper concave envelope of both vertex sets (the least upper bound).
CanonicalCurve join(const CanonicalCurve& a, const CanonicalCurve& b);

/// P . Q: pointwise minimum of the two boundaries (the greatest lower bound).
CanonicalCurve meet(const CanonicalCurve& a, const CanonicalCurve& b);

/// P >= Q as containment: every vertex of b on or below a's boundary
/// within kGeomTol.
bool dominates(const CanonicalCurve& a, const CanonicalCurve& b);

/// Vertex lists equal within kGeomTol (after the factory's collinear merge),
/// or containment both ways.
bool curve_equal(const CanonicalCurve& a, const CanonicalCurve& b);

/// P*: one observation per hypothesis, every posterior degenerate.
InfoSystem perfect(const Distribution& prior,
                   std::vector<std::string> hypothesis_labels = {});

/// P0: product of the prior with the uniform distribution over n_obs
/// observations; every posterior equals the prior.
InfoSystem null_system(const Distribution& prior, std::size_t n_obs,
                       std::vector<std::string> hypothesis_labels = {});

}  // namespace islog
