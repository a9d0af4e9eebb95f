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

#ifndef KORE_CHARGES_HPP
#define KORE_CHARGES_HPP

#include <functional>
#include <map>

#include "kore/setalgebra.hpp"

namespace kore {

/// A bounded, finitely additive set function (a charge) on a finite field,
/// determined by one rational value per atom.  Charges are signed: no
/// nonnegativity is imposed anywhere.
class FiniteCharge {
 public:
  /// Requires a finite field and exactly one value per atom.
  FiniteCharge(FieldOfSets field, VectorXq atom_values);

  const FieldOfSets& field() const { return field_; }
  const VectorXq& atom_values() const { return atom_values_; }

  /// mu(S) = sum of the values of the atoms inside S.  Throws
  /// FieldMembershipError when S is not a member of the field.
  Rational operator()(const Coalition& s) const;

  /// mu(N).
  Rational total() const;

 private:
  FieldOfSets field_;
  VectorXq atom_values_;
};

/// A charge on the finite-cofinite field over {1, 2, 3, ...}: finitely many
/// atom weights a_n plus a tail scalar c.  On members of the field,
///
///   mu(Fin A)   = sum_{n in A} a_n
///   mu(CoFin B) = sum_n a_n  -  sum_{n in B} a_n  +  c,
///
/// i.e. the tail is what escapes every finite set.  The charge is
/// sigma-additive exactly when the tail vanishes.
class FinCofCharge {
 public:
  FinCofCharge() = default;
  FinCofCharge(std::map<int, Rational> atom_weights, Rational tail);

  /// Point mass at a player: a_x = 1, tail 0.  This is sigma-additive and
  /// evaluates any simple function f to f(x) (see functional()).
  static FinCofCharge dirac(int player);

  const std::map<int, Rational>& atom_weights() const { return atom_weights_; }
  const Rational& tail() const { return tail_; }

  /// Evaluate on a Fin/CoFin coalition (UniverseMismatchError for finite-
  /// universe coalitions).
  Rational operator()(const Coalition& s) const;

  /// mu(N) = sum of atom weights + tail.
  Rational total() const;

  /// Largest player carrying a nonzero atom weight; 0 when there is none.
  int max_support() const;

 private:
  std::map<int, Rational> atom_weights_;  // no zero entries
  Rational tail_ = 0;
};

/// Constant-time sigma-additivity test: the tail is the sole obstruction.
bool is_sigma_additive(const FinCofCharge& mu);

/// The linear functional a charge induces on simple functions,
///   mu'(f) = sum_S coeff_S * mu(S).
/// Independent of the representation of f (two representations of the same
/// function agree), because mu is additive on the field.
Rational functional(const FiniteCharge& mu, const SimpleFunction& f);
Rational functional(const FinCofCharge& mu, const SimpleFunction& f);

/// A monotone sequence of coalitions i -> S_i (1-based) over the countable
/// universe, with its declared set limit.
struct MonotoneSequence {
  enum class Direction { Increasing, Decreasing };
  std::function<Coalition(int)> at;
  Direction direction;
  Coalition limit;
};

/// Fin{1..i}, increasing to N.
MonotoneSequence increasing_prefixes();
/// CoFin{1..i}, decreasing to the empty set.
MonotoneSequence decreasing_tails();

/// What a continuity probe observed along one monotone sequence.
struct ContinuityReport {
  Rational sequence_limit;  ///< eventual (exactly attained) value of mu(S_i)
  Rational limit_value;     ///< mu of the declared limit set
  bool continuous = false;  ///< sequence_limit == limit_value
  int stabilized_at = 0;    ///< first probed index of the constant stretch
};

/// Probe continuity of mu along the sequence.  Because the atom weights
/// are finitely supported, mu(S_i) is eventually constant; the probe walks
/// the sequence until the descriptors stop moving through the charge's
/// support (and past the declared limit's descriptor), then reads off the
/// exact eventual value.  Monotonicity and consistency with the declared
/// limit are checked at every probed index; violations raise
/// InvalidSequenceError.  This is a necessary-condition check along one
/// sequence, not a proof of continuity along all sequences.
ContinuityReport continuity_probe(const FinCofCharge& mu,
                                  const MonotoneSequence& sequence);

/// A player x with f(x) != 0, witnessing that the Dirac charge at x
/// separates f from the zero function.  Throws std::invalid_argument when
/// f is the zero function.
int separating_dirac(const SimpleFunction& f);

}  // namespace kore

#endif  // KORE_CHARGES_HPP
