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

#include "kore/charges.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace kore {

// --- FiniteCharge ----------------------------------------------------------

FiniteCharge::FiniteCharge(FieldOfSets field, VectorXq atom_values)
    : field_(std::move(field)), atom_values_(std::move(atom_values)) {
  if (!field_.is_finite_universe()) {
    throw std::invalid_argument(
        "FiniteCharge requires a finite field; use FinCofCharge over the "
        "countable universe");
  }
  if (static_cast<Eigen::Index>(field_.atoms().size()) != atom_values_.size()) {
    throw std::invalid_argument("one value per atom required");
  }
}

Rational FiniteCharge::operator()(const Coalition& s) const {
  if (!field_.contains(s)) {
    throw FieldMembershipError("coalition is not a member of the field");
  }
  Rational value = 0;
  const auto& atoms = field_.atoms();
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (is_subset(atoms[k], s)) {
      value += atom_values_(static_cast<Eigen::Index>(k));
    }
  }
  return value;
}

Rational FiniteCharge::total() const {
  Rational value = 0;
  for (Eigen::Index k = 0; k < atom_values_.size(); ++k) {
    value += atom_values_(k);
  }
  return value;
}

// --- FinCofCharge ----------------------------------------------------------

FinCofCharge::FinCofCharge(std::map<int, Rational> atom_weights, Rational tail)
    : tail_(std::move(tail)) {
  for (auto& [player, weight] : atom_weights) {
    if (player < 1) {
      throw std::invalid_argument("players are 1-based; got " +
                                  std::to_string(player));
    }
    if (weight != 0) atom_weights_.emplace(player, std::move(weight));
  }
}

FinCofCharge FinCofCharge::dirac(int player) {
  return FinCofCharge({{player, Rational(1)}}, Rational(0));
}

Rational FinCofCharge::operator()(const Coalition& s) const {
  if (s.universe().is_finite()) {
    throw UniverseMismatchError(
        "FinCofCharge evaluates countable-universe coalitions only");
  }
  // mu(S) = sum of atom weights inside S, plus the tail when S is cofinite.
  Rational value = 0;
  if (s.is_cofinite()) {
    for (const auto& [player, weight] : atom_weights_) value += weight;
    for (int excluded : s.descriptor()) {
      auto it = atom_weights_.find(excluded);
      if (it != atom_weights_.end()) value -= it->second;
    }
    value += tail_;
  } else {
    for (int member : s.descriptor()) {
      auto it = atom_weights_.find(member);
      if (it != atom_weights_.end()) value += it->second;
    }
  }
  return value;
}

Rational FinCofCharge::total() const {
  Rational value = tail_;
  for (const auto& [player, weight] : atom_weights_) value += weight;
  return value;
}

int FinCofCharge::max_support() const {
  return atom_weights_.empty() ? 0 : atom_weights_.rbegin()->first;
}

bool is_sigma_additive(const FinCofCharge& mu) { return mu.tail() == 0; }

// --- functionals -----------------------------------------------------------

Rational functional(const FiniteCharge& mu, const SimpleFunction& f) {
  if (!(f.universe() == mu.field().universe())) {
    throw UniverseMismatchError("function universe differs from the charge");
  }
  Rational value = 0;
  for (const auto& [coalition, coeff] : f.terms()) {
    value += coeff * mu(coalition);
  }
  return value;
}

Rational functional(const FinCofCharge& mu, const SimpleFunction& f) {
  if (f.universe().is_finite()) {
    throw UniverseMismatchError("function universe differs from the charge");
  }
  Rational value = 0;
  for (const auto& [coalition, coeff] : f.terms()) {
    value += coeff * mu(coalition);
  }
  return value;
}

// --- monotone sequences and continuity probes ------------------------------

namespace {

std::vector<int> prefix_of(int i) {
  std::vector<int> prefix(static_cast<std::size_t>(std::max(i, 0)));
  for (int k = 0; k < i; ++k) prefix[static_cast<std::size_t>(k)] = k + 1;
  return prefix;
}

}  // namespace

MonotoneSequence increasing_prefixes() {
  return MonotoneSequence{
      [](int i) {
        return Coalition::of(PlayerUniverse::countable(), prefix_of(i));
      },
      MonotoneSequence::Direction::Increasing,
      Coalition::grand(PlayerUniverse::countable())};
}

MonotoneSequence decreasing_tails() {
  return MonotoneSequence{
      [](int i) { return Coalition::cofinite(prefix_of(i)); },
      MonotoneSequence::Direction::Decreasing,
      Coalition::empty(PlayerUniverse::countable())};
}

namespace {

// The part of the charge's support lying inside S: mu(S_i) can only move
// while this set (or S_i's descriptor kind) moves.
std::set<int> support_inside(const FinCofCharge& mu, const Coalition& s) {
  std::set<int> inside;
  for (const auto& [player, weight] : mu.atom_weights()) {
    if (s.contains(player)) inside.insert(player);
  }
  return inside;
}

}  // namespace

ContinuityReport continuity_probe(const FinCofCharge& mu,
                                  const MonotoneSequence& sequence) {
  if (!sequence.at) {
    throw InvalidSequenceError("sequence has no generator");
  }
  if (sequence.limit.universe().is_finite()) {
    throw UniverseMismatchError("continuity probes run over the countable "
                                "universe");
  }
  const bool increasing =
      sequence.direction == MonotoneSequence::Direction::Increasing;
  const std::set<int> support_in_limit = support_inside(mu, sequence.limit);

  // Base horizon: everything the charge or the declared limit mentions,
  // plus a constancy window.  Extended geometrically for generators that
  // move slowly; a probe that never stabilizes is rejected.
  int base = mu.max_support();
  for (int x : sequence.limit.descriptor()) base = std::max(base, x);
  const int window = 3;
  int horizon = base + window + 1;
  const int horizon_cap = 4 * horizon + 64;

  std::vector<Rational> values;
  std::optional<Coalition> previous;
  int probed = 0;
  while (true) {
    for (int i = probed + 1; i <= horizon; ++i) {
      Coalition s = sequence.at(i);
      if (s.universe().is_finite()) {
        throw UniverseMismatchError(
            "generator produced a finite-universe coalition");
      }
      if (previous) {
        const bool ok = increasing ? is_subset(*previous, s)
                                   : is_subset(s, *previous);
        if (!ok) {
          throw InvalidSequenceError(
              "generator is not monotone at index " + std::to_string(i));
        }
      }
      const bool consistent = increasing ? is_subset(s, sequence.limit)
                                         : is_subset(sequence.limit, s);
      if (!consistent) {
        throw InvalidSequenceError(
            "generator leaves the declared limit at index " +
            std::to_string(i));
      }
      values.push_back(mu(s));
      previous = std::move(s);
    }
    probed = horizon;

    const bool support_settled =
        support_inside(mu, *previous) == support_in_limit;
    bool constant_tail = true;
    for (int k = 0; k < window; ++k) {
      if (values[static_cast<std::size_t>(probed - 1 - k)] != values.back()) {
        constant_tail = false;
        break;
      }
    }
    if (support_settled && constant_tail) break;
    if (horizon >= horizon_cap) {
      throw InvalidSequenceError(
          "sequence did not stabilize within the probe horizon");
    }
    horizon = std::min(2 * horizon, horizon_cap);
  }

  ContinuityReport report;
  report.sequence_limit = values.back();
  int first = probed;
  while (first > 1 &&
         values[static_cast<std::size_t>(first - 2)] == values.back()) {
    --first;
  }
  report.stabilized_at = first;
  report.limit_value = mu(sequence.limit);
  report.continuous = report.sequence_limit == report.limit_value;
  return report;
}

// --- separating point masses ------------------------------------------------

int separating_dirac(const SimpleFunction& f) {
  if (f.universe().is_finite()) {
    for (int p = 1; p <= f.universe().size(); ++p) {
      if (f.value_at(p) != 0) return p;
    }
    throw std::invalid_argument(
        "the zero function admits no separating point mass");
  }
  const CanonicalForm form = canonicalize(f, FieldOfSets::finite_cofinite());
  if (form.eventual_value() == 0) {
    for (const auto& [x, v] : form.exceptional()) {
      if (v != 0) return x;  // first key is the smallest such player
    }
    throw std::invalid_argument(
        "the zero function admits no separating point mass");
  }
  int x = 1;
  while (true) {
    auto it = form.exceptional().find(x);
    const Rational v = (it == form.exceptional().end()) ? form.eventual_value()
                                                        : it->second;
    if (v != 0) return x;
    ++x;
  }
}

}  // namespace kore
