#pragma once

#include <cstddef>
#include <vector>

namespace islog {

/// Probability distribution over hypotheses. Validated on construction:
/// entries nonnegative, sum within kProbTol of 1.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t e) const { return p_[e]; }
  const std::vector<double>& probs() const { return p_; }

  auto begin() const { return p_.begin(); }
  auto end() const { return p_.end(); }

 private:
  std::vector<double> p_;
};

/// Componentwise comparison within tol.
bool near(const Distribution& a, const Distribution& b, double tol);

}  // namespace islog
