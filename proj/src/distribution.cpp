#include "islog/distribution.hpp"

#include <cmath>
#include <string>

#include "islog/errors.hpp"
#include "islog/tolerances.hpp"

namespace islog {

Distribution::Distribution(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) fail(Errc::EmptyAxis, "distribution has no entries");
  double sum = 0.0;
  for (std::size_t e = 0; e < p_.size(); ++e) {
    if (p_[e] < 0.0)
      fail(Errc::NegativeEntry, "entry " + std::to_string(e + 1) + " is negative");
    sum += p_[e];
  }
  if (std::abs(sum - 1.0) > kProbTol)
    fail(Errc::SumNotOne, "entries sum to " + std::to_string(sum));
}

bool near(const Distribution& a, const Distribution& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t e = 0; e < a.size(); ++e)
    if (std::abs(a[e] - b[e]) > tol) return false;
  return true;
}

}  // namespace islog
