#pragma once

#include <cstddef>
#include <string_view>

#include "islog/distribution.hpp"
#include "islog/info_system.hpp"
#include "islog/matrix.hpp"

namespace islog {

enum class ScoreKind { Logarithmic, Quadratic, Decision };

/// A proper scoring rule. The logarithmic score uses the natural log.
/// Decision rules carry a payoff matrix U(a, e), rows = actions,
/// columns = hypotheses; the optimal action breaks ties toward the lowest
/// action index so a*(P) is reproducible.
class ScoreRule {
 public:
  static ScoreRule logarithmic() { return ScoreRule(ScoreKind::Logarithmic, Matrix()); }
  static ScoreRule quadratic() { return ScoreRule(ScoreKind::Quadratic, Matrix()); }
  static ScoreRule decision(Matrix payoff);

  ScoreKind kind() const { return kind_; }
  const Matrix& payoff() const { return payoff_; }
  std::string_view name() const;

 private:
  ScoreRule(ScoreKind k, Matrix u) : kind_(k), payoff_(std::move(u)) {}
  ScoreKind kind_;
  Matrix payoff_;  // Decision only
};

/// a*(Q): index of the action maximizing expected payoff under Q.
std::size_t best_action(const Matrix& payoff, const double* q, std::size_t d);

/// S(Q, e). Logarithmic returns -infinity when Q(e) = 0.
double score(const ScoreRule& s, const Distribution& q, std::size_t e);

/// G(P) = sum_e P(e) S(P, e), with the 0 log 0 = 0 convention.
double g_value(const ScoreRule& s, const Distribution& p);

/// G(P, Q) = sum_e P(e) S(Q, e). May be -infinity for the logarithmic score
/// when Q assigns 0 where P assigns positive mass; terms with P(e) = 0
/// contribute nothing.
double g_cross(const ScoreRule& s, const Distribution& p, const Distribution& q);

/// H(P) = sum_i P(i) G(P(E|i)); zero-probability observations contribute 0.
double h_value(const ScoreRule& s, const InfoSystem& p);

/// H(P, Q) = sum_i P(i) G(P(E|i), Q(E|i)). Requires identical observation
/// label lists and hypothesis counts; an observation with positive P-mass
/// but zero Q-mass has no Q-posterior and raises UndefinedPosterior.
double h_cross(const ScoreRule& s, const InfoSystem& p, const InfoSystem& q);

// Raw-span variants used by grid scans and coupling sweeps.
double g_value_raw(const ScoreRule& s, const double* p, std::size_t d);
double g_cross_raw(const ScoreRule& s, const double* p, const double* q, std::size_t d);

}  // namespace islog
