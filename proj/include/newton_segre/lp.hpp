#pragma once

#include <optional>
#include <vector>

#include "newton_segre/rational.hpp"

namespace nsegre {

enum class ObjectiveSense { Minimize, Maximize };
enum class ConstraintSense { LessEqual, Equal, GreaterEqual };

struct LpConstraint {
  std::vector<Rational> coefficients;
  ConstraintSense sense = ConstraintSense::LessEqual;
  Rational rhs;
};

// All variables are bounded below by 0; `upper_bounds`, when non-empty, has
// one optional entry per variable.
struct LpProblem {
  ObjectiveSense direction = ObjectiveSense::Minimize;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::optional<Rational>> upper_bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational optimum;              // valid when Optimal
  std::vector<Rational> witness; // one value per variable when Optimal
};

// Exact two-phase simplex with Bland's rule. Deterministic; throws
// InvalidArgument only for malformed problems (ragged dimensions).
LpOutcome solve_lp(const LpProblem& problem);

}  // namespace nsegre
