#include "islog/info_system.hpp"

#include <cmath>
#include <string>

#include "islog/errors.hpp"
#include "islog/tolerances.hpp"

namespace islog {

InfoSystem::InfoSystem(std::vector<std::string> hypothesis_labels,
                       std::vector<std::string> observation_labels, Matrix joint)
    : hyp_labels_(std::move(hypothesis_labels)),
      obs_labels_(std::move(observation_labels)),
      joint_(std::move(joint)) {
  if (hyp_labels_.size() != joint_.rows() || obs_labels_.size() != joint_.cols())
    fail(Errc::DimensionMismatch, "label counts do not match the joint matrix");
  if (joint_.rows() < 2) fail(Errc::EmptyAxis, "need at least 2 hypotheses");
  if (joint_.cols() < 1) fail(Errc::EmptyAxis, "need at least 1 observation");

  double total = 0.0;
  for (std::size_t r = 0; r < joint_.rows(); ++r) {
    for (std::size_t c = 0; c < joint_.cols(); ++c) {
      const double v = joint_(r, c);
      if (v < 0.0)
        fail(Errc::NegativeEntry,
             "row " + std::to_string(r + 1) + " col " + std::to_string(c + 1));
      total += v;
    }
  }
  if (std::abs(total - 1.0) > kProbTol)
    fail(Errc::SumNotOne, "joint sums to " + std::to_string(total));

  const auto rows = joint_.row_sums();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r] <= 0.0)
      fail(Errc::ZeroPriorRow, "hypothesis " + std::to_string(r + 1) + " has zero prior");
}

Distribution InfoSystem::prior() const { return Distribution(joint_.row_sums()); }

Distribution InfoSystem::marginal() const {
  auto cols = joint_.col_sums();
  // Column sums of a valid joint can drift a hair below 0 never, above 1
  // never; they form a distribution by construction.
  return Distribution(std::move(cols));
}

Distribution InfoSystem::posterior(std::size_t i) const {
  if (i >= n_observations()) fail(Errc::DimensionMismatch, "observation index out of range");
  double m = 0.0;
  for (std::size_t e = 0; e < n_hypotheses(); ++e) m += joint_(e, i);
  if (m <= 0.0)
    fail(Errc::ZeroProbabilityObservation,
         "observation " + std::to_string(i + 1) + " has zero probability");
  std::vector<double> post(n_hypotheses());
  for (std::size_t e = 0; e < n_hypotheses(); ++e) post[e] = joint_(e, i) / m;
  return Distribution(std::move(post));
}

bool priors_match(const InfoSystem& p, const InfoSystem& q, double tol) {
  if (p.n_hypotheses() != q.n_hypotheses()) return false;
  const auto a = p.joint().row_sums();
  const auto b = q.joint().row_sums();
  for (std::size_t e = 0; e < a.size(); ++e)
    if (std::abs(a[e] - b[e]) > tol) return false;
  return true;
}

}  // namespace islog
