#include <doctest.h>

#include <cmath>
#include <functional>

#include "islog/errors.hpp"
#include "islog/info_system.hpp"
#include "islog/canonical.hpp"
#include "islog/rng.hpp"
#include "test_support.hpp"

using namespace islog;

namespace {
InfoSystem make(const std::vector<std::vector<double>>& rows) {
  return InfoSystem(testsup::hyp_labels(rows.size()), testsup::obs_labels(rows[0].size()),
                    Matrix::from_rows(rows));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an islog::Error");
  return Errc::ParseError;
}
}  // namespace

TEST_CASE("validate_is accepts a symmetric channel") {
  const InfoSystem s = make({{0.45, 0.05}, {0.05, 0.45}});
  CHECK(s.n_hypotheses() == 2);
  CHECK(s.prior()[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.prior()[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("validate_is rejects the spec's error fixtures") {
  CHECK(code_of([] { make({{0.5, 0.5}, {0.1, 0.1}}); }) == Errc::SumNotOne);
  CHECK(code_of([] { make({{0.5, 0.5}, {0.0, 0.0}}); }) == Errc::ZeroPriorRow);
  CHECK(code_of([] { make({{0.6, 0.5}, {-0.1, 0.0}}); }) == Errc::NegativeEntry);
  CHECK(code_of([] {
          InfoSystem({"only"}, {"o1"}, Matrix::from_rows({{1.0}}));
        }) == Errc::EmptyAxis);
  CHECK(code_of([] {
          Matrix::from_rows({{0.5, 0.5}, {0.5}});
        }) == Errc::DimensionMismatch);
}

TEST_CASE("validation tolerance boundary on the total sum") {
  // 1e-9 off is accepted, 1e-7 off is not.
  CHECK_NOTHROW(make({{0.45, 0.05}, {0.05, 0.4499999995}}));
  CHECK(code_of([] { make({{0.45, 0.05}, {0.05, 0.4500001}}); }) == Errc::SumNotOne);
}

TEST_CASE("prior and marginal are row and column sums") {
  const InfoSystem s = make({{0.2, 0.1}, {0.3, 0.4}});
  CHECK(s.prior()[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(s.prior()[1] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(s.marginal()[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.marginal()[1] == doctest::Approx(0.5).epsilon(1e-12));

  const InfoSystem pi = perfect(Distribution({0.3, 0.7}));
  CHECK(near(pi.prior(), Distribution({0.3, 0.7}), 1e-12));

  const InfoSystem nu = null_system(Distribution({0.4, 0.6}), 2);
  CHECK(near(nu.marginal(), Distribution({0.5, 0.5}), 1e-12));
}

TEST_CASE("posterior renormalizes a column") {
  const InfoSystem s = make({{0.45, 0.05}, {0.05, 0.45}});
  CHECK(near(s.posterior(0), Distribution({0.9, 0.1}), 1e-12));

  const InfoSystem u = make({{0.25, 0.25}, {0.25, 0.25}});
  CHECK(near(u.posterior(1), Distribution({0.5, 0.5}), 1e-12));

  // Null information: the prior is the posterior for every observation.
  const InfoSystem nu = null_system(Distribution({0.4, 0.6}), 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(near(nu.posterior(i), nu.prior(), 1e-12));
}

TEST_CASE("posterior of a zero-mass observation is an error") {
  const InfoSystem s = make({{0.5, 0.0}, {0.5, 0.0}});
  CHECK(code_of([&] { s.posterior(1); }) == Errc::ZeroProbabilityObservation);
}

TEST_CASE("posteriors reweighted by marginals recover the joint") {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + rng.index(3), m = 1 + rng.index(6);
    const InfoSystem s = testsup::rand_is(rng, d, m);
    const Distribution marg = s.marginal();
    for (std::size_t i = 0; i < m; ++i) {
      const Distribution post = s.posterior(i);
      for (std::size_t e = 0; e < d; ++e)
        CHECK(post[e] * marg[i] == doctest::Approx(s.joint()(e, i)).epsilon(1e-12));
    }
  }
}

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(Distribution({0.5, 0.6}), Error);
  CHECK_THROWS_AS(Distribution({-0.1, 1.1}), Error);
  CHECK_NOTHROW(Distribution({0.25, 0.75}));
}
