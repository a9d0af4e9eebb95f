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

#ifndef KORE_SETALGEBRA_HPP
#define KORE_SETALGEBRA_HPP

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <vector>

#include "kore/errors.hpp"
#include "kore/rational.hpp"

namespace kore {

/// The player set a game lives on: either {1, ..., n} or countably
/// infinite {1, 2, 3, ...}.
class PlayerUniverse {
 public:
  /// Universe {1, ..., n}; requires n >= 1.
  static PlayerUniverse finite(int n);
  /// Countably infinite universe.
  static PlayerUniverse countable();

  bool is_finite() const { return players_ > 0; }
  /// Number of players; only defined for finite universes.
  int size() const;

  friend bool operator==(const PlayerUniverse& a, const PlayerUniverse& b) {
    return a.players_ == b.players_;
  }

 private:
  explicit PlayerUniverse(int players) : players_(players) {}
  int players_;  // 0 encodes the countable universe
};

/// A set of players.  Over a finite universe this is a bitset; over the
/// countable universe it is a descriptor: either a finite set Fin(A) or a
/// cofinite set CoFin(B) = N \ B, each described by a sorted finite list.
///
/// Coalitions are immutable values with a deterministic total order, so
/// they can key maps and appear in canonical (reproducible) listings.
class Coalition {
 public:
  /// Coalition with the given members (players are 1-based).  Over a
  /// finite universe the members must lie in {1, ..., n}; over the
  /// countable universe this builds the finite set Fin(members).
  static Coalition of(const PlayerUniverse& universe, std::vector<int> members);
  /// Cofinite set N \ excluded over the countable universe.
  static Coalition cofinite(std::vector<int> excluded);
  static Coalition empty(const PlayerUniverse& universe);
  /// The grand coalition N (over the countable universe: CoFin of nothing).
  static Coalition grand(const PlayerUniverse& universe);

  const PlayerUniverse& universe() const { return universe_; }
  bool contains(int player) const;
  bool is_empty() const;
  bool is_grand() const;

  /// True iff this is a cofinite set over the countable universe (the
  /// grand coalition included).  Meaningless -- and rejected -- over finite
  /// universes.
  bool is_cofinite() const;

  /// Finite member list.  Defined for finite-universe coalitions and for
  /// Fin descriptors; a cofinite set has no finite member list.
  std::vector<int> members() const;

  /// Sorted list describing a countable-universe coalition: the members of
  /// a Fin set, or the excluded players of a CoFin set.
  const std::vector<int>& descriptor() const;

  /// Bit representation over a finite universe (bit i-1 = player i).
  const boost::dynamic_bitset<>& bits() const;

  friend Coalition operator|(const Coalition& a, const Coalition& b);
  friend Coalition operator&(const Coalition& a, const Coalition& b);
  friend Coalition operator~(const Coalition& a);
  friend bool is_subset(const Coalition& a, const Coalition& b);

  friend bool operator==(const Coalition& a, const Coalition& b);
  friend bool operator<(const Coalition& a, const Coalition& b);

 private:
  Coalition(PlayerUniverse universe, boost::dynamic_bitset<> bits);
  Coalition(bool cofinite, std::vector<int> described);

  PlayerUniverse universe_;
  boost::dynamic_bitset<> bits_;  // finite universes only
  bool cofinite_ = false;         // countable universe only
  std::vector<int> described_;    // sorted, duplicate-free
};

/// A set A' of admissible coalitions over a finite universe: always
/// contains the empty and grand coalitions, holds no duplicates, and keeps
/// its members in the canonical coalition order.
class CoalitionSystem {
 public:
  /// Build a system over a finite universe.  The empty coalition is
  /// inserted if absent; the grand coalition must be present (games without
  /// it have no balancedness question to ask).  Throws std::invalid_argument
  /// on duplicates, a missing grand coalition, or a countable universe.
  CoalitionSystem(PlayerUniverse universe, std::vector<Coalition> coalitions);

  /// Rule handle for "all finite and cofinite subsets of {1, 2, ...}" --
  /// the admissible system of games over the countable universe.  It has
  /// no explicit coalition list.
  static CoalitionSystem finite_cofinite_handle();

  const PlayerUniverse& universe() const { return universe_; }
  /// Explicit member list; only available over finite universes.
  const std::vector<Coalition>& coalitions() const;
  bool contains(const Coalition& s) const;

 private:
  explicit CoalitionSystem(PlayerUniverse universe) : universe_(universe) {}
  PlayerUniverse universe_;
  std::vector<Coalition> coalitions_;  // sorted, unique, with empty and N
};

/// A field of sets, represented by what the artifact can compute with:
/// either the finite field generated by an atom partition of {1, ..., n},
/// or the finite-cofinite field over the countable universe.
class FieldOfSets {
 public:
  /// Field over a finite universe whose atoms are the given partition.
  /// Validates disjointness and coverage.
  static FieldOfSets from_atoms(PlayerUniverse universe,
                                std::vector<Coalition> atoms);
  /// The field of finite and cofinite subsets of {1, 2, 3, ...}.
  static FieldOfSets finite_cofinite();

  const PlayerUniverse& universe() const { return universe_; }
  bool is_finite_universe() const { return universe_.is_finite(); }

  /// Atom partition; only defined over finite universes.
  const std::vector<Coalition>& atoms() const;

  /// Membership test.  Over a finite universe: is s a union of atoms?
  /// Over the countable universe every Fin/CoFin descriptor belongs.
  bool contains(const Coalition& s) const;

  /// log2 of the field's cardinality (= number of atoms) for finite fields.
  std::size_t atom_count() const { return atoms_.size(); }

  friend bool operator==(const FieldOfSets& a, const FieldOfSets& b);

 private:
  explicit FieldOfSets(PlayerUniverse universe) : universe_(universe) {}
  PlayerUniverse universe_;
  std::vector<Coalition> atoms_;  // sorted by smallest member
};

/// Smallest field of sets containing every coalition of the system.  The
/// atoms are the classes of "belongs to exactly the same members of A'",
/// so the hull has 2^(number of atoms) sets.  Only computable over finite
/// universes; throws UnsupportedOperationError otherwise.
FieldOfSets field_hull(const CoalitionSystem& system);

/// A finitely supported formal combination  f = sum_S  coeff_S * chi_S  of
/// coalition indicators.  Terms with equal coalitions accumulate; zero
/// coefficients are dropped.  The pointwise value f(x) is representation
/// independent; the canonical form (see canonicalize) decides equality of
/// the underlying functions.
class SimpleFunction {
 public:
  explicit SimpleFunction(PlayerUniverse universe) : universe_(universe) {}

  void add_term(const Coalition& coalition, const Rational& coeff);
  const std::map<Coalition, Rational>& terms() const { return terms_; }
  const PlayerUniverse& universe() const { return universe_; }

  /// Pointwise value f(x) = sum of coefficients of coalitions containing x.
  Rational value_at(int player) const;

  friend SimpleFunction operator+(const SimpleFunction& a,
                                  const SimpleFunction& b);
  friend SimpleFunction operator-(const SimpleFunction& a,
                                  const SimpleFunction& b);
  friend SimpleFunction operator*(const Rational& scale,
                                  const SimpleFunction& f);

 private:
  PlayerUniverse universe_;
  std::map<Coalition, Rational> terms_;
};

/// Canonical form of a simple function relative to a field.  Over a finite
/// field: one value per atom.  Over the finite-cofinite field: the eventual
/// value (attained at all large players) plus the finitely many exceptional
/// players whose value differs.  Two representations of the same function
/// always canonicalize to the same form, so operator== decides function
/// equality.
class CanonicalForm {
 public:
  static CanonicalForm over_atoms(std::vector<Coalition> atoms,
                                  VectorXq values);
  static CanonicalForm eventual(Rational eventual_value,
                                std::map<int, Rational> exceptional);

  bool finite() const { return finite_; }
  const std::vector<Coalition>& atoms() const { return atoms_; }
  const VectorXq& values() const { return values_; }
  const Rational& eventual_value() const { return eventual_; }
  const std::map<int, Rational>& exceptional() const { return exceptional_; }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b);
  friend CanonicalForm operator+(const CanonicalForm& a,
                                 const CanonicalForm& b);
  friend CanonicalForm operator*(const Rational& scale,
                                 const CanonicalForm& f);

 private:
  CanonicalForm() = default;
  bool finite_ = false;
  std::vector<Coalition> atoms_;
  VectorXq values_;
  Rational eventual_ = 0;
  std::map<int, Rational> exceptional_;
};

/// Canonicalize f against the field.  Every coalition in f's support must
/// belong to the field (FieldMembershipError otherwise); the universes must
/// match (UniverseMismatchError).  Linear: canonical(a*f + b*g) equals
/// a*canonical(f) + b*canonical(g).
CanonicalForm canonicalize(const SimpleFunction& f, const FieldOfSets& field);

/// sup_x |f(x)|, computed pointwise; exact, and zero iff f is the zero
/// function.  Needs no field: over the countable universe the supremum is
/// the larger of |eventual value| and the exceptional values' magnitudes.
Rational sup_norm(const SimpleFunction& f);

/// Pointwise equality of two simple functions over the same universe
/// (finite: all players compared; countable: canonical forms compared).
bool pointwise_equal(const SimpleFunction& a, const SimpleFunction& b);

}  // namespace kore

#endif  // KORE_SETALGEBRA_HPP
