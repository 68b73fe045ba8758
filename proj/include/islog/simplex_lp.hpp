#pragma once

#include <vector>

#include "islog/matrix.hpp"

namespace islog {

struct FeasibilityResult {
  bool feasible = false;
  double phase1_objective = 0.0;  // residual L1 mass left on artificials
};

/// Phase-1 dense simplex: decides whether {x >= 0 : A x = b} is nonempty.
/// Bland's rule, so it terminates; sized for desk-scale systems
/// (hundreds of variables). Feasible iff the artificial mass can be driven
/// to tol or below.
FeasibilityResult lp_feasible(const Matrix& a, std::vector<double> b, double tol);

}  // namespace islog
