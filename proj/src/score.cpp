#include "islog/score.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "islog/errors.hpp"

namespace islog {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b) fail(Errc::DimensionMismatch, "distributions have different dimensions");
}

void check_payoff(const ScoreRule& s, std::size_t d) {
  if (s.kind() == ScoreKind::Decision && s.payoff().cols() != d)
    fail(Errc::DimensionMismatch,
         "payoff matrix has " + std::to_string(s.payoff().cols()) +
             " columns for " + std::to_string(d) + " hypotheses");
}
}  // namespace

ScoreRule ScoreRule::decision(Matrix payoff) {
  if (payoff.rows() < 1 || payoff.cols() < 1)
    fail(Errc::DimensionMismatch, "decision score needs at least one action and hypothesis");
  return ScoreRule(ScoreKind::Decision, std::move(payoff));
}

std::string_view ScoreRule::name() const {
  switch (kind_) {
    case ScoreKind::Logarithmic: return "log";
    case ScoreKind::Quadratic: return "quad";
    case ScoreKind::Decision: return "decision";
  }
  return "?";
}

std::size_t best_action(const Matrix& payoff, const double* q, std::size_t d) {
  std::size_t best = 0;
  double best_value = kNegInf;
  for (std::size_t a = 0; a < payoff.rows(); ++a) {
    double v = 0.0;
    const double* row = payoff.row_ptr(a);
    for (std::size_t e = 0; e < d; ++e) v += q[e] * row[e];
    if (v > best_value) {  // ties keep the lowest action index
      best_value = v;
      best = a;
    }
  }
  return best;
}

double score(const ScoreRule& s, const Distribution& q, std::size_t e) {
  const std::size_t d = q.size();
  if (e >= d) fail(Errc::DimensionMismatch, "hypothesis index out of range");
  check_payoff(s, d);
  switch (s.kind()) {
    case ScoreKind::Logarithmic:
      return q[e] > 0.0 ? std::log(q[e]) : kNegInf;
    case ScoreKind::Quadratic: {
      double ss = 0.0;
      for (double v : q) ss += v * v;
      return 2.0 * q[e] - ss;
    }
    case ScoreKind::Decision:
      return s.payoff()(best_action(s.payoff(), q.probs().data(), d), e);
  }
  return 0.0;
}

double g_value_raw(const ScoreRule& s, const double* p, std::size_t d) {
  switch (s.kind()) {
    case ScoreKind::Logarithmic: {
      double g = 0.0;
      for (std::size_t e = 0; e < d; ++e)
        if (p[e] > 0.0) g += p[e] * std::log(p[e]);  // 0 log 0 = 0
      return g;
    }
    case ScoreKind::Quadratic: {
      double ss = 0.0;
      for (std::size_t e = 0; e < d; ++e) ss += p[e] * p[e];
      double g = 0.0;
      for (std::size_t e = 0; e < d; ++e) g += p[e] * (2.0 * p[e] - ss);
      return g;
    }
    case ScoreKind::Decision: {
      // G(P) = max_a sum_e P(e) U(a,e); the maximizing action is a*(P).
      double best = kNegInf;
      for (std::size_t a = 0; a < s.payoff().rows(); ++a) {
        double v = 0.0;
        const double* row = s.payoff().row_ptr(a);
        for (std::size_t e = 0; e < d; ++e) v += p[e] * row[e];
        if (v > best) best = v;
      }
      return best;
    }
  }
  return 0.0;
}

double g_cross_raw(const ScoreRule& s, const double* p, const double* q, std::size_t d) {
  switch (s.kind()) {
    case ScoreKind::Logarithmic: {
      double g = 0.0;
      for (std::size_t e = 0; e < d; ++e) {
        if (p[e] <= 0.0) continue;
        if (q[e] <= 0.0) return kNegInf;
        g += p[e] * std::log(q[e]);
      }
      return g;
    }
    case ScoreKind::Quadratic: {
      double ss = 0.0;
      for (std::size_t e = 0; e < d; ++e) ss += q[e] * q[e];
      double g = 0.0;
      for (std::size_t e = 0; e < d; ++e) g += p[e] * (2.0 * q[e] - ss);
      return g;
    }
    case ScoreKind::Decision: {
      const std::size_t a = best_action(s.payoff(), q, d);
      double g = 0.0;
      const double* row = s.payoff().row_ptr(a);
      for (std::size_t e = 0; e < d; ++e) g += p[e] * row[e];
      return g;
    }
  }
  return 0.0;
}

double g_value(const ScoreRule& s, const Distribution& p) {
  check_payoff(s, p.size());
  return g_value_raw(s, p.probs().data(), p.size());
}

double g_cross(const ScoreRule& s, const Distribution& p, const Distribution& q) {
  check_same_dim(p.size(), q.size());
  check_payoff(s, q.size());
  return g_cross_raw(s, p.probs().data(), q.probs().data(), p.size());
}

double h_value(const ScoreRule& s, const InfoSystem& p) {
  check_payoff(s, p.n_hypotheses());
  const std::size_t d = p.n_hypotheses();
  std::vector<double> post(d);
  double h = 0.0;
  for (std::size_t i = 0; i < p.n_observations(); ++i) {
    double m = 0.0;
    for (std::size_t e = 0; e < d; ++e) m += p.joint()(e, i);
    if (m <= 0.0) continue;
    for (std::size_t e = 0; e < d; ++e) post[e] = p.joint()(e, i) / m;
    h += m * g_value_raw(s, post.data(), d);
  }
  return h;
}

double h_cross(const ScoreRule& s, const InfoSystem& p, const InfoSystem& q) {
  if (p.observation_labels() != q.observation_labels())
    fail(Errc::ObservationSpaceMismatch, "observation label lists differ");
  if (p.n_hypotheses() != q.n_hypotheses())
    fail(Errc::DimensionMismatch, "hypothesis counts differ");
  check_payoff(s, p.n_hypotheses());
  const std::size_t d = p.n_hypotheses();
  std::vector<double> pp(d), qq(d);
  double h = 0.0;
  for (std::size_t i = 0; i < p.n_observations(); ++i) {
    double pm = 0.0, qm = 0.0;
    for (std::size_t e = 0; e < d; ++e) {
      pm += p.joint()(e, i);
      qm += q.joint()(e, i);
    }
    if (pm <= 0.0) continue;
    if (qm <= 0.0)
      fail(Errc::UndefinedPosterior,
           "observation " + std::to_string(i + 1) + " has positive P-mass but zero Q-mass");
    for (std::size_t e = 0; e < d; ++e) {
      pp[e] = p.joint()(e, i) / pm;
      qq[e] = q.joint()(e, i) / qm;
    }
    h += pm * g_cross_raw(s, pp.data(), qq.data(), d);
  }
  return h;
}

}  // namespace islog
