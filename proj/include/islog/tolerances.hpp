#pragma once

namespace islog {

// Validation tolerance on probability sums.
inline constexpr double kProbTol = 1e-9;

// Comparison tolerance for score identities (properness, linearity, ...).
inline constexpr double kScoreTol = 1e-12;

// Geometric tolerance for containment, intersection and collinearity tests
// on canonical curves.
inline constexpr double kGeomTol = 1e-9;

}  // namespace islog
