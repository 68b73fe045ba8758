#include <doctest.h>

#include <cmath>

#include "islog/canonical.hpp"
#include "islog/errors.hpp"
#include "islog/oracle.hpp"
#include "islog/rng.hpp"
#include "islog/score.hpp"
#include "test_support.hpp"

using namespace islog;

namespace {
InfoSystem make(const std::vector<std::vector<double>>& rows) {
  return InfoSystem(testsup::hyp_labels(rows.size()), testsup::obs_labels(rows[0].size()),
                    Matrix::from_rows(rows));
}

CanonicalCurve curve(std::vector<Point> pts) { return CanonicalCurve::from_vertices(std::move(pts)); }

const CanonicalCurve kDiag = CanonicalCurve::diagonal();
const CanonicalCurve kPerfect = curve({{0, 0}, {0, 1}, {1, 1}});
}  // namespace

TEST_CASE("canonicalize: symmetric channel, null, perfect") {
  const CanonicalCurve c = canonicalize(make({{0.45, 0.05}, {0.05, 0.45}}));
  CHECK(testsup::points_close(c.vertices(), {{0, 0}, {0.1, 0.9}, {1, 1}}, 1e-12));

  // Any null system collapses to the diagonal regardless of prior or width.
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Distribution prior = testsup::rand_binary_prior(rng);
    const CanonicalCurve d = canonicalize(null_system(prior, 1 + rng.index(6)));
    CHECK(curve_equal(d, kDiag));
  }

  const CanonicalCurve p = canonicalize(perfect(Distribution({0.3, 0.7})));
  CHECK(testsup::points_close(p.vertices(), kPerfect.vertices(), 1e-12));

  CHECK_THROWS_AS(canonicalize(testsup::rand_is(rng, 3, 3)), Error);
}

TEST_CASE("canonicalize: zero columns dropped, ratio ties merged") {
  // Middle observation has zero mass; the two outer ones tie in ratio.
  const InfoSystem s = make({{0.225, 0.0, 0.225, 0.05}, {0.025, 0.0, 0.025, 0.45}});
  const CanonicalCurve c = canonicalize(s);
  CHECK(testsup::points_close(c.vertices(), {{0, 0}, {0.1, 0.9}, {1, 1}}, 1e-12));
}

TEST_CASE("curve invariants: slopes strictly decrease, above diagonal") {
  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    const InfoSystem s =
        testsup::rand_binary_with_prior(rng, 2 + rng.index(7), testsup::rand_binary_prior(rng));
    const CanonicalCurve c = canonicalize(s);
    const auto& v = c.vertices();
    CHECK(v.front().x == 0.0);
    CHECK(v.front().y == 0.0);
    CHECK(v.back().x == 1.0);
    CHECK(v.back().y == 1.0);
    const auto sl = c.slopes();
    for (std::size_t k = 1; k < sl.size(); ++k) CHECK(sl[k] < sl[k - 1]);
    for (const Point& pt : v) CHECK(pt.y >= pt.x - 1e-12);
  }
}

TEST_CASE("reconstruct: diagonal, perfect, round trip") {
  const InfoSystem p0 = reconstruct(kDiag, Distribution({0.5, 0.5}));
  CHECK(p0.n_observations() == 1);
  CHECK(p0.joint()(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p0.joint()(1, 0) == doctest::Approx(0.5).epsilon(1e-12));

  const InfoSystem pi = reconstruct(kPerfect, Distribution({0.3, 0.7}));
  CHECK(pi.joint()(0, 0) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(pi.joint()(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pi.joint()(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pi.joint()(1, 1) == doctest::Approx(0.7).epsilon(1e-12));

  CHECK_THROWS_AS(reconstruct(kDiag, Distribution({1.0, 0.0})), Error);

  Rng rng(123);
  for (int t = 0; t < 200; ++t) {
    const CanonicalCurve c = oracle::random_concave_curve(rng);
    const Distribution prior = testsup::rand_binary_prior(rng);
    const CanonicalCurve back = canonicalize(reconstruct(c, prior));
    CHECK(testsup::points_close(back.vertices(), c.vertices(), 1e-9));
  }
}

TEST_CASE("join: identity laws and the hull oracle") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const CanonicalCurve c = oracle::random_concave_curve(rng);
    CHECK(curve_equal(join(c, kDiag), c));   // P0 + P = P
    CHECK(curve_equal(join(c, c), c));       // idempotence
    CHECK(curve_equal(join(c, kPerfect), kPerfect));  // P* + P = P*
  }

  const CanonicalCurve a = curve({{0, 0}, {0.1, 0.9}, {1, 1}});
  const CanonicalCurve b = curve({{0, 0}, {0.5, 0.95}, {1, 1}});
  const CanonicalCurve j = join(a, b);
  // Gift-wrap oracle over the pooled vertices.
  std::vector<Point> pool = a.vertices();
  pool.insert(pool.end(), b.vertices().begin(), b.vertices().end());
  CHECK(testsup::points_close(j.vertices(), testsup::oracle_upper_hull(pool), 1e-9));
  // All four distinct vertices survive here (slopes 9 > 0.125 > 0.1).
  CHECK(j.vertices().size() == 4);

  for (int t = 0; t < 50; ++t) {
    const CanonicalCurve x = oracle::random_concave_curve(rng);
    const CanonicalCurve y = oracle::random_concave_curve(rng);
    std::vector<Point> pts = x.vertices();
    pts.insert(pts.end(), y.vertices().begin(), y.vertices().end());
    CHECK(testsup::points_close(join(x, y).vertices(), testsup::oracle_upper_hull(pts), 1e-9));
  }
}

TEST_CASE("meet: identity laws and the pointwise-min oracle") {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const CanonicalCurve c = oracle::random_concave_curve(rng);
    CHECK(curve_equal(meet(c, kDiag), kDiag));      // P0 . P = P0
    CHECK(curve_equal(meet(c, kPerfect), c));       // P* . P = P
    CHECK(curve_equal(meet(c, c), c));              // idempotence
  }

  const CanonicalCurve a = curve({{0, 0}, {0.1, 0.9}, {1, 1}});
  const CanonicalCurve b = curve({{0, 0}, {0.5, 0.95}, {1, 1}});
  const CanonicalCurve m = meet(a, b);
  // Hand-computed crossing of b's first segment with a's second:
  // 1.9x = 0.9 + (x - 0.1)/9 at x = 8/16.1.
  const double xc = 8.0 / 16.1;
  CHECK(testsup::points_close(m.vertices(), {{0, 0}, {xc, 1.9 * xc}, {1, 1}}, 1e-9));

  for (int t = 0; t < 50; ++t) {
    const CanonicalCurve x = oracle::random_concave_curve(rng);
    const CanonicalCurve y = oracle::random_concave_curve(rng);
    const CanonicalCurve mm = meet(x, y);
    for (int g = 0; g <= 500; ++g) {
      const double xx = g / 500.0;
      const double want = std::min(testsup::oracle_eval(x.vertices(), xx),
                                   testsup::oracle_eval(y.vertices(), xx));
      CHECK(std::abs(testsup::oracle_eval(mm.vertices(), xx) - want) <= 1e-9);
    }
  }
}

TEST_CASE("dominates: bounds and the incomparable fixture") {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const CanonicalCurve c = oracle::random_concave_curve(rng);
    CHECK(dominates(c, kDiag));
    CHECK(dominates(kPerfect, c));
  }
  const CanonicalCurve a = curve({{0, 0}, {0.1, 0.9}, {1, 1}});
  const CanonicalCurve b = curve({{0, 0}, {0.5, 0.95}, {1, 1}});
  CHECK(!dominates(a, b));  // (0.5, 0.95) is above a
  CHECK(!dominates(b, a));  // (0.1, 0.9) is above b
}

TEST_CASE("curve_equal: collinear midpoints are normalized away") {
  const CanonicalCurve c = curve({{0, 0}, {0.1, 0.9}, {1, 1}});
  const CanonicalCurve with_mid = curve({{0, 0}, {0.05, 0.45}, {0.1, 0.9}, {1, 1}});
  CHECK(curve_equal(c, with_mid));
  CHECK(curve_equal(c, c));
  CHECK(!curve_equal(kDiag, kPerfect));
}

TEST_CASE("lattice laws on random curves") {
  Rng rng(1234);
  for (int t = 0; t < 60; ++t) {
    const CanonicalCurve a = oracle::random_concave_curve(rng);
    const CanonicalCurve b = oracle::random_concave_curve(rng);
    const CanonicalCurve c = oracle::random_concave_curve(rng);

    CHECK(curve_equal(join(a, b), join(b, a)));
    CHECK(curve_equal(meet(a, b), meet(b, a)));
    CHECK(curve_equal(join(a, join(b, c)), join(join(a, b), c)));
    CHECK(curve_equal(meet(a, meet(b, c)), meet(meet(a, b), c)));

    // Absorption.
    CHECK(curve_equal(join(a, meet(a, b)), a));
    CHECK(curve_equal(meet(a, join(a, b)), a));

    // Consistency: the three statements agree as predicates.
    const bool dom = dominates(a, b);
    CHECK(dom == curve_equal(join(a, b), a));
    CHECK(dom == curve_equal(meet(a, b), b));

    // Semi-distributivity.
    CHECK(dominates(meet(join(a, b), join(a, c)), join(a, meet(b, c))));
    CHECK(dominates(meet(a, join(b, c)), join(meet(a, b), meet(a, c))));

    // l.u.b. minimality against a constructed common dominator.
    const CanonicalCurve r = join(join(oracle::random_concave_curve(rng), a), b);
    CHECK(dominates(r, join(a, b)));
  }
}

TEST_CASE("semi-cancellation (contrapositive)") {
  Rng rng(777);
  int checked = 0;
  while (checked < 40) {
    const CanonicalCurve p = oracle::random_concave_curve(rng);
    const CanonicalCurve q = oracle::random_concave_curve(rng);
    const CanonicalCurve r = oracle::random_concave_curve(rng);
    if (curve_equal(q, r)) continue;
    ++checked;
    const bool same_join = curve_equal(join(p, q), join(p, r));
    const bool same_meet = curve_equal(meet(p, q), meet(p, r));
    CHECK(!(same_join && same_meet));
  }
}

TEST_CASE("dominance orders values for every score; incomparable curves disagree") {
  Rng rng(31);
  const Distribution prior({0.5, 0.5});
  int incomparable_seen = 0;
  for (int t = 0; t < 60; ++t) {
    const CanonicalCurve a = oracle::random_concave_curve(rng);
    const CanonicalCurve b = oracle::random_concave_curve(rng);
    const CanonicalCurve hi = join(a, b);  // comparable pair (hi, a)
    const InfoSystem sa = reconstruct(a, prior);
    const InfoSystem shi = reconstruct(hi, prior);
    for (const ScoreRule& s : {ScoreRule::logarithmic(), ScoreRule::quadratic(),
                               ScoreRule::decision(testsup::rand_payoff(rng, 3, 2))})
      CHECK(h_value(s, shi) >= h_value(s, sa) - 1e-9);

    if (!dominates(a, b) && !dominates(b, a) && incomparable_seen < 20) {
      ++incomparable_seen;
      // Two decision scores ordering the incomparable pair oppositely exist.
      const InfoSystem sb = reconstruct(b, prior);
      bool a_wins = false, b_wins = false;
      for (int k = 0; k < 200 && !(a_wins && b_wins); ++k) {
        const ScoreRule s = ScoreRule::decision(testsup::rand_payoff(rng, 2 + rng.index(3), 2));
        const double ha = h_value(s, sa), hb = h_value(s, sb);
        if (ha > hb + 1e-12) a_wins = true;
        if (hb > ha + 1e-12) b_wins = true;
      }
      CHECK(a_wins);
      CHECK(b_wins);
    }
  }
  CHECK(incomparable_seen > 0);
}

TEST_CASE("perfect and null constructions") {
  const InfoSystem p = perfect(Distribution({0.5, 0.5}));
  CHECK(p.joint()(0, 0) == 0.5);
  CHECK(p.joint()(0, 1) == 0.0);
  const InfoSystem n = null_system(Distribution({0.3, 0.7}), 2);
  CHECK(n.joint()(0, 0) == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(n.joint()(1, 1) == doctest::Approx(0.35).epsilon(1e-12));
  CHECK_THROWS_AS(perfect(Distribution({1.0, 0.0})), Error);
}
