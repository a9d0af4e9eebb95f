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

#include "kore/core.hpp"

#include <algorithm>
#include <sstream>

namespace kore {

namespace {

std::string bracket_name(const char* prefix, const std::vector<int>& players) {
  std::ostringstream out;
  out << prefix << '[';
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (i) out << ',';
    out << players[i];
  }
  out << ']';
  return out.str();
}

}  // namespace

// --- FiniteGame ------------------------------------------------------------

FiniteGame::FiniteGame(CoalitionSystem system,
                       std::map<Coalition, Rational> values)
    : system_(std::move(system)), values_(std::move(values)) {
  const Coalition empty = Coalition::empty(system_.universe());
  for (const auto& [coalition, value] : values_) {
    if (!system_.contains(coalition)) {
      throw std::invalid_argument(
          "value assigned to a coalition outside the admissible system");
    }
    if (coalition == empty && value != 0) {
      throw std::invalid_argument("the empty coalition must have value zero");
    }
  }
  values_[empty] = 0;
  for (const Coalition& coalition : system_.coalitions()) {
    if (!values_.count(coalition)) {
      throw std::invalid_argument("missing value for an admissible coalition");
    }
  }
}

const Rational& FiniteGame::value(const Coalition& s) const {
  auto it = values_.find(s);
  if (it == values_.end()) {
    throw std::invalid_argument(
        "coalition is not a member of the admissible system");
  }
  return it->second;
}

const Rational& FiniteGame::grand_value() const {
  return value(Coalition::grand(universe()));
}

// --- weight systems ---------------------------------------------------------

SimpleFunction coalition_cover(const WeightSystem& weights) {
  SimpleFunction cover(weights.universe);
  for (const auto& [coalition, weight] : weights.weights) {
    cover.add_term(coalition, weight);
  }
  return cover;
}

Rational weighted_worth(const WeightSystem& weights, const FiniteGame& game) {
  Rational worth = 0;
  for (const auto& [coalition, weight] : weights.weights) {
    worth += weight * game.value(coalition);
  }
  return worth;
}

// --- balancedness ------------------------------------------------------------

RationalLP balancedness_lp(const FiniteGame& game,
                           BalancednessVariant variant) {
  const int n = game.universe().size();
  const Coalition empty = Coalition::empty(game.universe());
  const Coalition grand = Coalition::grand(game.universe());

  std::vector<Coalition> columns;
  for (const Coalition& s : game.system().coalitions()) {
    if (!(s == empty)) columns.push_back(s);
  }

  RationalLP lp;
  lp.sense = Sense::Maximize;
  const Eigen::Index vars = static_cast<Eigen::Index>(columns.size());
  lp.constraints = MatrixXq::Zero(n, vars);
  lp.rhs = VectorXq::Constant(n, Rational(1));
  lp.objective = VectorXq::Zero(vars);
  for (Eigen::Index j = 0; j < vars; ++j) {
    const Coalition& s = columns[static_cast<std::size_t>(j)];
    lp.variable_names.push_back(bracket_name("lam", s.members()));
    lp.signs.push_back(variant == BalancednessVariant::GrandFree && s == grand
                           ? VarSign::Free
                           : VarSign::NonNegative);
    lp.objective(j) = game.value(s);
    for (int p = 1; p <= n; ++p) {
      if (s.contains(p)) lp.constraints(p - 1, j) = 1;
    }
  }
  return lp;
}

namespace {

WeightSystem weights_from_vector(const FiniteGame& game,
                                 const std::vector<Coalition>& columns,
                                 const VectorXq& values) {
  WeightSystem ws{game.universe(), {}};
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Rational& w = values(static_cast<Eigen::Index>(j));
    if (w != 0) ws.weights.emplace(columns[j], w);
  }
  return ws;
}

// Exact re-check of a claimed cover: sum lambda_S chi_S equals level * chi_N
// pointwise.
bool covers_exactly(const WeightSystem& ws, const Rational& level) {
  const SimpleFunction cover = coalition_cover(ws);
  for (int p = 1; p <= ws.universe.size(); ++p) {
    if (cover.value_at(p) != level) return false;
  }
  return true;
}

}  // namespace

BalancednessVerdict check_balanced(const FiniteGame& game,
                                   BalancednessVariant variant) {
  const RationalLP lp = balancedness_lp(game, variant);
  const LPOutcome outcome = solve(lp);
  if (!verify(lp, outcome)) {
    throw std::logic_error("balancedness outcome failed self-verification");
  }

  const Coalition empty = Coalition::empty(game.universe());
  std::vector<Coalition> columns;
  for (const Coalition& s : game.system().coalitions()) {
    if (!(s == empty)) columns.push_back(s);
  }

  if (const auto* optimal = std::get_if<OptimalOutcome>(&outcome)) {
    if (optimal->value <= game.grand_value()) {
      return BalancedVerdict{optimal->value};
    }
    WeightSystem certificate =
        weights_from_vector(game, columns, optimal->primal);
    if (!covers_exactly(certificate, Rational(1)) ||
        weighted_worth(certificate, game) != optimal->value) {
      throw std::logic_error("unbalancedness certificate failed re-checking");
    }
    return UnbalancedVerdict{std::move(certificate), optimal->value};
  }
  if (const auto* unbounded = std::get_if<UnboundedOutcome>(&outcome)) {
    WeightSystem base = weights_from_vector(game, columns, unbounded->point);
    WeightSystem ray = weights_from_vector(game, columns, unbounded->ray);
    if (!covers_exactly(base, Rational(1)) ||
        !covers_exactly(ray, Rational(0)) ||
        weighted_worth(ray, game) <= 0) {
      throw std::logic_error("unbounded-violation ray failed re-checking");
    }
    return UnboundedViolationVerdict{std::move(base), std::move(ray)};
  }
  throw std::logic_error(
      "the covering system cannot be infeasible: the grand coalition covers N");
}

// --- core elements ------------------------------------------------------------

CoreResult find_core_element(const FiniteGame& game) {
  const FieldOfSets hull = field_hull(game.system());
  const auto& atoms = hull.atoms();
  const Coalition empty = Coalition::empty(game.universe());
  const Coalition grand = Coalition::grand(game.universe());

  std::vector<Coalition> bound_rows;  // admissible S with mu(S) >= v(S)
  for (const Coalition& s : game.system().coalitions()) {
    if (!(s == empty) && !(s == grand)) bound_rows.push_back(s);
  }

  // Variables: one free charge value per atom, then one slack per bound.
  const Eigen::Index atom_count = static_cast<Eigen::Index>(atoms.size());
  const Eigen::Index slack_count = static_cast<Eigen::Index>(bound_rows.size());
  const Eigen::Index vars = atom_count + slack_count;
  const Eigen::Index rows = slack_count + 1;

  RationalLP lp;
  lp.sense = Sense::Minimize;
  lp.constraints = MatrixXq::Zero(rows, vars);
  lp.rhs = VectorXq::Zero(rows);
  lp.objective = VectorXq::Zero(vars);
  for (Eigen::Index a = 0; a < atom_count; ++a) {
    lp.variable_names.push_back(
        bracket_name("mu", atoms[static_cast<std::size_t>(a)].members()));
    lp.signs.push_back(VarSign::Free);
    lp.objective(a) = 1;  // minimize mu(N); pinned to v(N) by the last row
  }
  for (Eigen::Index k = 0; k < slack_count; ++k) {
    lp.variable_names.push_back(bracket_name(
        "slack", bound_rows[static_cast<std::size_t>(k)].members()));
    lp.signs.push_back(VarSign::NonNegative);
  }
  for (Eigen::Index k = 0; k < slack_count; ++k) {
    const Coalition& s = bound_rows[static_cast<std::size_t>(k)];
    for (Eigen::Index a = 0; a < atom_count; ++a) {
      if (is_subset(atoms[static_cast<std::size_t>(a)], s)) {
        lp.constraints(k, a) = 1;
      }
    }
    lp.constraints(k, atom_count + k) = -1;  // mu(S) - slack = v(S)
    lp.rhs(k) = game.value(s);
  }
  for (Eigen::Index a = 0; a < atom_count; ++a) {
    lp.constraints(slack_count, a) = 1;  // efficiency: mu(N) = v(N)
  }
  lp.rhs(slack_count) = game.grand_value();

  const LPOutcome outcome = solve(lp);
  if (!verify(lp, outcome)) {
    throw std::logic_error("core search outcome failed self-verification");
  }

  if (const auto* optimal = std::get_if<OptimalOutcome>(&outcome)) {
    FiniteCharge charge(hull, optimal->primal.head(atom_count));
    if (!check_core_membership(game, charge).member) {
      throw std::logic_error("core element failed exact membership re-check");
    }
    return charge;
  }

  // Infeasible dual side: by duality the covering program must yield a
  // violation.  The nonnegative-cone program is always feasible (weight 1
  // on N) and bounded (every weight is capped by the covering equalities),
  // so its optimum is finite and, with an empty core, exceeds v(N); its
  // optimal cover is the canonical emptiness certificate.
  const BalancednessVerdict verdict =
      check_balanced(game, BalancednessVariant::SchmeidlerNonNeg);
  if (const auto* unbalanced = std::get_if<UnbalancedVerdict>(&verdict)) {
    return EmptinessCertificate{unbalanced->certificate, unbalanced->value};
  }
  throw std::logic_error(
      "duality breach: no core element yet the game verifies as balanced");
}

MembershipReport check_core_membership(const FiniteGame& game,
                                       const FiniteCharge& charge) {
  const FieldOfSets hull = field_hull(game.system());
  if (!(charge.field() == hull)) {
    throw FieldMembershipError(
        "charge lives on a different field than the hull of the game's "
        "system");
  }
  const Coalition empty = Coalition::empty(game.universe());
  const Coalition grand = Coalition::grand(game.universe());

  MembershipReport report;
  for (const Coalition& s : game.system().coalitions()) {
    if (s == empty) continue;
    const Rational actual = charge(s);
    const Rational& required = game.value(s);
    if (s == grand) {
      if (actual != required) {
        report.violations.push_back(
            CoreViolation{s, required, actual, required - actual, true});
      }
    } else if (actual < required) {
      report.violations.push_back(
          CoreViolation{s, required, actual, required - actual, false});
    }
  }
  report.member = report.violations.empty();
  return report;
}

// --- grand-weight elimination -------------------------------------------------

WeightSystem eliminate_grand_weight(const WeightSystem& weights) {
  const Coalition grand = Coalition::grand(weights.universe);
  Rational grand_weight = 0;
  if (auto it = weights.weights.find(grand); it != weights.weights.end()) {
    grand_weight = it->second;
  }
  if (grand_weight > 0) {
    throw std::invalid_argument(
        "grand-weight elimination requires a nonpositive grand weight");
  }
  const Rational divisor = Rational(1) - grand_weight;  // >= 1
  WeightSystem rescaled{weights.universe, {}};
  for (const auto& [coalition, weight] : weights.weights) {
    if (coalition == grand) continue;
    if (weight < 0) {
      throw std::invalid_argument(
          "grand-weight elimination requires nonnegative non-grand weights");
    }
    if (weight != 0) rescaled.weights.emplace(coalition, weight / divisor);
  }
  return rescaled;
}

}  // namespace kore
