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

#include "kore/lp.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>

namespace kore {

void RationalLP::validate() const {
  const Eigen::Index n = objective.size();
  if (static_cast<Eigen::Index>(signs.size()) != n ||
      static_cast<Eigen::Index>(variable_names.size()) != n) {
    throw std::invalid_argument("objective, signs and names disagree on the "
                                "number of variables");
  }
  if (constraints.cols() != n) {
    throw std::invalid_argument("constraint matrix width differs from the "
                                "number of variables");
  }
  if (constraints.rows() != rhs.size()) {
    throw std::invalid_argument("constraint matrix height differs from the "
                                "right-hand side");
  }
  std::set<std::string> seen;
  for (const std::string& name : variable_names) {
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate variable name \"" + name + "\"");
    }
  }
}

namespace {

// Internal simplex state over the split (all-nonnegative) variables.
// Tableau layout: [ real columns | artificial identity | rhs ], with the
// artificial block doubling as the running basis inverse.
struct Simplex {
  MatrixXq tableau;
  std::vector<Eigen::Index> basis;  // column basic in each row
  Eigen::Index reals = 0;           // number of real (split) columns
  Eigen::Index rows = 0;

  Eigen::Index rhs_col() const { return reals + rows; }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Rational inverse = Rational(1) / tableau(row, col);
    tableau.row(row) *= inverse;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row) continue;
      const Rational factor = tableau(r, col);
      if (factor == 0) continue;
      tableau.row(r) -= factor * tableau.row(row);
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Simplex multipliers for a cost vector over all columns:
  // y = cost_basis . basis_inverse, read off the artificial block.
  VectorXq multipliers(const VectorXq& cost) const {
    VectorXq y = VectorXq::Zero(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Eigen::Index b = basis[static_cast<std::size_t>(r)];
      if (cost(b) == 0) continue;
      for (Eigen::Index i = 0; i < rows; ++i) {
        y(i) += cost(b) * tableau(r, reals + i);
      }
    }
    return y;
  }

  Rational objective_value(const VectorXq& cost) const {
    Rational value = 0;
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Eigen::Index b = basis[static_cast<std::size_t>(r)];
      if (cost(b) != 0) value += cost(b) * tableau(r, rhs_col());
    }
    return value;
  }

  void dump(std::ostream& out, const char* label) const {
    out << "[simplex] " << label << "\n";
    for (Eigen::Index r = 0; r < rows; ++r) {
      out << "  basis " << basis[static_cast<std::size_t>(r)] << " |";
      for (Eigen::Index c = 0; c <= rhs_col(); ++c) {
        out << ' ' << tableau(r, c);
      }
      out << "\n";
    }
  }
};

enum class PhaseResult { Optimal, Unbounded };

// Bland's rule: enter the lowest-index real column with positive reduced
// cost; leave on the minimum ratio, ties broken by lowest basic column.
// Artificial columns never enter, which fixes them at zero once they
// leave the basis.
PhaseResult run_phase(Simplex& state, const VectorXq& cost,
                      Eigen::Index* entering_out, const SolveOptions& options) {
  std::ostream& log = options.log ? *options.log : std::cerr;
  while (true) {
    // Reduced cost of column j: cost_j - cost_basis . tableau_column (the
    // tableau already holds basis_inverse * column).  Scan in index order.
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < state.reals; ++j) {
      Rational reduced = cost(j);
      for (Eigen::Index r = 0; r < state.rows; ++r) {
        const Eigen::Index b = state.basis[static_cast<std::size_t>(r)];
        if (cost(b) != 0) reduced -= cost(b) * state.tableau(r, j);
      }
      if (reduced > 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return PhaseResult::Optimal;

    Eigen::Index leaving = -1;
    Rational best_ratio = 0;
    for (Eigen::Index r = 0; r < state.rows; ++r) {
      const Rational& step = state.tableau(r, entering);
      if (step <= 0) continue;
      const Rational ratio = state.tableau(r, state.rhs_col()) / step;
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           state.basis[static_cast<std::size_t>(r)] <
               state.basis[static_cast<std::size_t>(leaving)])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) {
      if (entering_out) *entering_out = entering;
      return PhaseResult::Unbounded;
    }
    state.pivot(leaving, entering);
    if (options.trace) state.dump(log, "after pivot");
  }
}

}  // namespace

LPOutcome solve(const RationalLP& lp, const SolveOptions& options) {
  lp.validate();
  const Eigen::Index n = lp.variable_count();
  const Eigen::Index m = lp.constraint_count();

  // Internally always maximize.
  const bool maximizing = lp.sense == Sense::Maximize;
  VectorXq internal_objective =
      maximizing ? lp.objective : (-lp.objective).eval();

  // Split free variables into nonnegative differences.
  std::vector<Eigen::Index> split_origin;
  std::vector<int> split_sign;
  for (Eigen::Index j = 0; j < n; ++j) {
    split_origin.push_back(j);
    split_sign.push_back(+1);
    if (lp.signs[static_cast<std::size_t>(j)] == VarSign::Free) {
      split_origin.push_back(j);
      split_sign.push_back(-1);
    }
  }
  const Eigen::Index reals = static_cast<Eigen::Index>(split_origin.size());

  // Scale rows so the right-hand side is nonnegative, remembering signs.
  std::vector<int> row_sign(static_cast<std::size_t>(m), +1);
  Simplex state;
  state.reals = reals;
  state.rows = m;
  state.tableau = MatrixXq::Zero(m, reals + m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (lp.rhs(i) < 0) row_sign[static_cast<std::size_t>(i)] = -1;
    const Rational d(row_sign[static_cast<std::size_t>(i)]);
    for (Eigen::Index k = 0; k < reals; ++k) {
      state.tableau(i, k) = d * Rational(split_sign[static_cast<std::size_t>(k)]) *
                            lp.constraints(i, split_origin[static_cast<std::size_t>(k)]);
    }
    state.tableau(i, reals + i) = 1;
    state.tableau(i, state.rhs_col()) = d * lp.rhs(i);
    state.basis.push_back(reals + i);
  }

  // ---- Phase 1: drive the artificial variables to zero. ----
  VectorXq phase1_cost = VectorXq::Zero(reals + m);
  for (Eigen::Index i = 0; i < m; ++i) phase1_cost(reals + i) = -1;
  if (run_phase(state, phase1_cost, nullptr, options) !=
      PhaseResult::Optimal) {
    throw std::logic_error("phase one cannot be unbounded");
  }
  if (state.objective_value(phase1_cost) < 0) {
    // Infeasible: the phase-one multipliers aggregate the equalities into
    // an impossible one.  Flip them into the documented Farkas convention
    // and undo the row scaling.
    const VectorXq pi = state.multipliers(phase1_cost);
    VectorXq farkas(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      farkas(i) = -Rational(row_sign[static_cast<std::size_t>(i)]) * pi(i);
    }
    return InfeasibleOutcome{std::move(farkas)};
  }
  // Pivot leftover artificials out of the basis where a real column allows
  // it; rows that cannot (all-zero real coefficients) are redundant
  // equalities and stay inert.
  for (Eigen::Index r = 0; r < m; ++r) {
    if (state.basis[static_cast<std::size_t>(r)] < reals) continue;
    for (Eigen::Index j = 0; j < reals; ++j) {
      if (state.tableau(r, j) != 0) {
        state.pivot(r, j);
        break;
      }
    }
  }

  // ---- Phase 2: optimize the real objective. ----
  VectorXq phase2_cost = VectorXq::Zero(reals + m);
  for (Eigen::Index k = 0; k < reals; ++k) {
    phase2_cost(k) = Rational(split_sign[static_cast<std::size_t>(k)]) *
                     internal_objective(split_origin[static_cast<std::size_t>(k)]);
  }
  Eigen::Index entering = -1;
  const PhaseResult result = run_phase(state, phase2_cost, &entering, options);

  // Current basic solution, folded back onto the original variables.
  VectorXq split_point = VectorXq::Zero(reals);
  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index b = state.basis[static_cast<std::size_t>(r)];
    if (b < reals) split_point(b) = state.tableau(r, state.rhs_col());
  }
  VectorXq point = VectorXq::Zero(n);
  for (Eigen::Index k = 0; k < reals; ++k) {
    point(split_origin[static_cast<std::size_t>(k)]) +=
        Rational(split_sign[static_cast<std::size_t>(k)]) * split_point(k);
  }

  if (result == PhaseResult::Unbounded) {
    VectorXq split_ray = VectorXq::Zero(reals);
    split_ray(entering) = 1;
    for (Eigen::Index r = 0; r < m; ++r) {
      const Eigen::Index b = state.basis[static_cast<std::size_t>(r)];
      if (b < reals) split_ray(b) = -state.tableau(r, entering);
    }
    VectorXq ray = VectorXq::Zero(n);
    for (Eigen::Index k = 0; k < reals; ++k) {
      ray(split_origin[static_cast<std::size_t>(k)]) +=
          Rational(split_sign[static_cast<std::size_t>(k)]) * split_ray(k);
    }
    return UnboundedOutcome{std::move(point), std::move(ray)};
  }

  const Rational internal_value = state.objective_value(phase2_cost);
  const VectorXq pi = state.multipliers(phase2_cost);
  VectorXq dual(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    dual(i) = Rational(row_sign[static_cast<std::size_t>(i)]) * pi(i);
    if (!maximizing) dual(i) = -dual(i);
  }
  OptimalOutcome outcome;
  outcome.value = maximizing ? internal_value : Rational(-internal_value);
  outcome.primal = std::move(point);
  outcome.dual = std::move(dual);
  return outcome;
}

bool verify(const RationalLP& lp, const LPOutcome& outcome) {
  lp.validate();
  const Eigen::Index n = lp.variable_count();
  const Eigen::Index m = lp.constraint_count();
  const bool maximizing = lp.sense == Sense::Maximize;

  const auto feasible_point = [&](const VectorXq& x) {
    if (x.size() != n) return false;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (lp.signs[static_cast<std::size_t>(j)] == VarSign::NonNegative &&
          x(j) < 0) {
        return false;
      }
    }
    const VectorXq residual = lp.constraints * x - lp.rhs;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (residual(i) != 0) return false;
    }
    return true;
  };

  const auto dot = [](const VectorXq& a, const VectorXq& b) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
  };

  if (const auto* optimal = std::get_if<OptimalOutcome>(&outcome)) {
    if (!feasible_point(optimal->primal)) return false;
    if (dot(lp.objective, optimal->primal) != optimal->value) return false;
    if (optimal->dual.size() != m) return false;
    // Dual feasibility: y . A_j >= c_j on nonnegative variables when
    // maximizing (<= when minimizing), with equality on free variables.
    for (Eigen::Index j = 0; j < n; ++j) {
      Rational slack = -lp.objective(j);
      for (Eigen::Index i = 0; i < m; ++i) {
        slack += optimal->dual(i) * lp.constraints(i, j);
      }
      if (lp.signs[static_cast<std::size_t>(j)] == VarSign::Free) {
        if (slack != 0) return false;
      } else if (maximizing ? slack < 0 : slack > 0) {
        return false;
      }
    }
    // Strong duality: multiplier value equals the claimed optimum.
    return dot(optimal->dual, lp.rhs) == optimal->value;
  }

  if (const auto* unbounded = std::get_if<UnboundedOutcome>(&outcome)) {
    if (!feasible_point(unbounded->point)) return false;
    if (unbounded->ray.size() != n) return false;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (lp.signs[static_cast<std::size_t>(j)] == VarSign::NonNegative &&
          unbounded->ray(j) < 0) {
        return false;
      }
    }
    const VectorXq drift = lp.constraints * unbounded->ray;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (drift(i) != 0) return false;
    }
    const Rational gain = dot(lp.objective, unbounded->ray);
    return maximizing ? gain > 0 : gain < 0;
  }

  const auto& infeasible = std::get<InfeasibleOutcome>(outcome);
  if (infeasible.farkas.size() != m) return false;
  for (Eigen::Index j = 0; j < n; ++j) {
    Rational combined = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      combined += infeasible.farkas(i) * lp.constraints(i, j);
    }
    if (lp.signs[static_cast<std::size_t>(j)] == VarSign::Free) {
      if (combined != 0) return false;
    } else if (combined > 0) {
      return false;
    }
  }
  return dot(infeasible.farkas, lp.rhs) > 0;
}

}  // namespace kore
