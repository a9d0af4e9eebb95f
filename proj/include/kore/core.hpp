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

#ifndef KORE_CORE_HPP
#define KORE_CORE_HPP

#include <map>
#include <variant>
#include <vector>

#include "kore/charges.hpp"
#include "kore/lp.hpp"
#include "kore/setalgebra.hpp"

namespace kore {

/// A transferable-utility game with restricted cooperation: a coalition
/// system A' over a finite universe and one rational worth per admissible
/// coalition, with v(empty) = 0.
class FiniteGame {
 public:
  /// Requires a value for every member of the system except (optionally)
  /// the empty coalition, which is forced to zero; a nonzero value for the
  /// empty coalition is rejected.
  FiniteGame(CoalitionSystem system, std::map<Coalition, Rational> values);

  const CoalitionSystem& system() const { return system_; }
  const PlayerUniverse& universe() const { return system_.universe(); }
  const Rational& value(const Coalition& s) const;
  const Rational& grand_value() const;

 private:
  CoalitionSystem system_;
  std::map<Coalition, Rational> values_;
};

/// Finitely many rational weights on coalitions.  The object of
/// balancedness: lambda covers the grand coalition when
/// sum_S lambda_S chi_S = chi_N.
struct WeightSystem {
  PlayerUniverse universe;
  std::map<Coalition, Rational> weights;
};

/// sum_S lambda_S chi_S as a simple function (how much weight covers each
/// player).
SimpleFunction coalition_cover(const WeightSystem& weights);

/// sum_S lambda_S v(S): the worth a weight system extracts from a game.
Rational weighted_worth(const WeightSystem& weights, const FiniteGame& game);

/// Which cone the balancing weights range over.
///  - SchmeidlerNonNeg: every weight nonnegative.
///  - GrandFree: the grand coalition's weight is sign-unrestricted (the
///    cone behind countably-additive-core arguments); over finite games
///    the two variants reach the same balanced/unbalanced verdict.
enum class BalancednessVariant { SchmeidlerNonNeg, GrandFree };

/// The balancedness linear program of a game: one variable per nonempty
/// admissible coalition, one covering equality per player, objective
/// sum lambda_S v(S) to be maximized.  The game is balanced iff the
/// optimum is at most v(N).
RationalLP balancedness_lp(const FiniteGame& game, BalancednessVariant variant);

/// The optimum exists and stays within v(N): every balanced cover of N is
/// worth at most the grand coalition.
struct BalancedVerdict {
  Rational optimal_value;
};

/// A cover worth more than v(N): sum lambda_S chi_S = chi_N exactly while
/// sum lambda_S v(S) = value > v(N).
struct UnbalancedVerdict {
  WeightSystem certificate;
  Rational value;
};

/// GrandFree only: covers of unbounded worth.  base covers N; ray adds
/// nothing to the cover (sum lambda_S chi_S = 0) but positive worth, so
/// base + t * ray violates balancedness beyond any bound.
struct UnboundedViolationVerdict {
  WeightSystem base;
  WeightSystem ray;
};

using BalancednessVerdict = std::variant<BalancedVerdict, UnbalancedVerdict,
                                         UnboundedViolationVerdict>;

/// Solve the balancedness LP and wrap the outcome, re-checking every
/// certificate by direct arithmetic before returning it.
BalancednessVerdict check_balanced(const FiniteGame& game,
                                   BalancednessVariant variant);

/// A certificate of core emptiness: weights covering N exactly whose worth
/// exceeds v(N).
struct EmptinessCertificate {
  WeightSystem weights;
  Rational value;  ///< sum lambda_S v(S), strictly above v(N)
};

using CoreResult = std::variant<FiniteCharge, EmptinessCertificate>;

/// Find a charge in the core -- additive on the hull of A', efficient
/// (mu(N) = v(N)) and dominating every admissible worth -- or a certificate
/// that none exists.  Existence here is dual to GrandFree balancedness.
CoreResult find_core_element(const FiniteGame& game);

/// One violated core constraint.
struct CoreViolation {
  Coalition coalition;
  Rational required;   ///< v(S), or v(N) for the efficiency equality
  Rational actual;     ///< mu(S)
  Rational deficit;    ///< required - actual (how much the charge is short)
  bool efficiency = false;
};

struct MembershipReport {
  bool member = false;
  std::vector<CoreViolation> violations;
};

/// Exact membership check of a charge against every admissible coalition.
/// The charge must live on the hull of the game's system
/// (FieldMembershipError otherwise).
MembershipReport check_core_membership(const FiniteGame& game,
                                       const FiniteCharge& charge);

/// Rescale a weight system with nonpositive grand weight L = lambda_N <= 0
/// (and all other weights nonnegative) into one with zero grand weight:
/// every other weight is divided by 1 - L.  The rescaled system covers
///   (cover(lambda) - L chi_N) / (1 - L)
/// and extracts worth (worth(lambda) - L v(N)) / (1 - L), so a cover of N
/// worth more than v(N) stays one: violations survive the elimination.
/// Throws std::invalid_argument when lambda_N > 0 or another weight is
/// negative.
WeightSystem eliminate_grand_weight(const WeightSystem& weights);

}  // namespace kore

#endif  // KORE_CORE_HPP
