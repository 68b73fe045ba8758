#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "islog/distribution.hpp"
#include "islog/matrix.hpp"

namespace islog {

/// An information system: a joint probability model over hypotheses (rows)
/// and observations (columns). Construction validates all invariants:
/// nonnegative entries, total mass 1 within kProbTol, strictly positive
/// priors, at least 2 hypotheses and 1 observation. Zero-probability
/// observation columns are legal (they carry no weight in any value).
///
/// Values are immutable after construction; every operation on them is a
/// pure function, so instances can be shared freely across threads.
class InfoSystem {
 public:
  InfoSystem(std::vector<std::string> hypothesis_labels,
             std::vector<std::string> observation_labels, Matrix joint);

  std::size_t n_hypotheses() const { return joint_.rows(); }
  std::size_t n_observations() const { return joint_.cols(); }
  bool binary() const { return n_hypotheses() == 2; }

  const std::vector<std::string>& hypothesis_labels() const { return hyp_labels_; }
  const std::vector<std::string>& observation_labels() const { return obs_labels_; }
  const Matrix& joint() const { return joint_; }

  /// Row sums: the prior P(e).
  Distribution prior() const;

  /// Column sums: the initial probability of each observation P(i).
  Distribution marginal() const;

  /// Column i renormalized: P(E | i). Throws ZeroProbabilityObservation when
  /// the column has no mass.
  Distribution posterior(std::size_t i) const;

 private:
  std::vector<std::string> hyp_labels_;
  std::vector<std::string> obs_labels_;
  Matrix joint_;
};

/// Priors equal within tol (same dimension required).
bool priors_match(const InfoSystem& p, const InfoSystem& q, double tol);

}  // namespace islog
