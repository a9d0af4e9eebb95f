// Copyright 2026 The kore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KORE_LP_HPP
#define KORE_LP_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "kore/rational.hpp"

namespace kore {

enum class Sense { Maximize, Minimize };
enum class VarSign { NonNegative, Free };

/// A linear program in equality form over exact rationals:
///
///   max / min  objective . x    subject to    constraints * x = rhs,
///
/// where each variable is either sign-free or nonnegative.  Inequalities
/// are expressed by the caller through explicit slack variables, which
/// keeps this type a faithful matrix/cone pair.
struct RationalLP {
  Sense sense = Sense::Maximize;
  std::vector<std::string> variable_names;  // unique, for reporting
  std::vector<VarSign> signs;
  MatrixXq constraints;  // one row per equality
  VectorXq rhs;
  VectorXq objective;

  Eigen::Index variable_count() const { return objective.size(); }
  Eigen::Index constraint_count() const { return constraints.rows(); }

  /// Dimension and name-uniqueness checks; throws std::invalid_argument.
  void validate() const;
};

/// Optimum found: the optimal value, a primal solution, and the equality
/// multipliers y.  y certifies optimality: constraints' y >= objective
/// componentwise on nonnegative variables (<= when minimizing), with
/// equality on free variables, and y . rhs equals the optimal value.
struct OptimalOutcome {
  Rational value;
  VectorXq primal;
  VectorXq dual;
};

/// The objective is unbounded over the feasible set: a feasible point plus
/// an improving ray (constraints * ray = 0, ray respects the sign cone,
/// objective . ray > 0 when maximizing, < 0 when minimizing).
struct UnboundedOutcome {
  VectorXq point;
  VectorXq ray;
};

/// No feasible point exists: y is an infeasibility multiplier in the sense
/// of Farkas -- y . constraints is <= 0 on nonnegative variables and = 0 on
/// free variables, while y . rhs > 0.
struct InfeasibleOutcome {
  VectorXq farkas;
};

using LPOutcome = std::variant<OptimalOutcome, UnboundedOutcome,
                               InfeasibleOutcome>;

struct SolveOptions {
  bool trace = false;        ///< dump tableaux after every pivot
  std::ostream* log = nullptr;  ///< destination for traces (default stderr)
};

/// Exact two-phase primal simplex with Bland's rule.  Free variables are
/// split internally into nonnegative differences; all pivoting is over
/// rationals, so the returned outcome is exact and -- given identical
/// inputs -- identical bit for bit.
LPOutcome solve(const RationalLP& lp, const SolveOptions& options = {});

/// Check an outcome against the LP by direct arithmetic only: feasibility,
/// complementary value equality and dual feasibility for optima; ray
/// conditions for unbounded claims; the Farkas inequalities for
/// infeasibility claims.  Shares no code with the pivoting path.
bool verify(const RationalLP& lp, const LPOutcome& outcome);

}  // namespace kore

#endif  // KORE_LP_HPP
