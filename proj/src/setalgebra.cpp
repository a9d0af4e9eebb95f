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

#include "kore/setalgebra.hpp"

#include <algorithm>
#include <set>

namespace kore {

namespace {

std::vector<int> sorted_unique(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

void require_positive_players(const std::vector<int>& players) {
  for (int p : players) {
    if (p < 1) {
      throw std::invalid_argument("players are 1-based; got " +
                                  std::to_string(p));
    }
  }
}

// Sorted-vector set operations for Fin/CoFin descriptors.
std::vector<int> vec_union(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<int> vec_intersection(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> vec_difference(const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool vec_contains(const std::vector<int>& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool vec_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool vec_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  return vec_intersection(a, b).empty();
}

void require_same_universe(const Coalition& a, const Coalition& b) {
  if (!(a.universe() == b.universe())) {
    throw UniverseMismatchError(
        "coalitions live over different player universes");
  }
}

}  // namespace

// --- PlayerUniverse ------------------------------------------------------

PlayerUniverse PlayerUniverse::finite(int n) {
  if (n < 1) {
    throw std::invalid_argument("a finite universe needs at least one player");
  }
  return PlayerUniverse(n);
}

PlayerUniverse PlayerUniverse::countable() { return PlayerUniverse(0); }

int PlayerUniverse::size() const {
  if (!is_finite()) {
    throw std::logic_error("the countable universe has no player count");
  }
  return players_;
}

// --- Coalition -----------------------------------------------------------

Coalition::Coalition(PlayerUniverse universe, boost::dynamic_bitset<> bits)
    : universe_(universe), bits_(std::move(bits)) {}

Coalition::Coalition(bool cofinite, std::vector<int> described)
    : universe_(PlayerUniverse::countable()),
      cofinite_(cofinite),
      described_(std::move(described)) {}

Coalition Coalition::of(const PlayerUniverse& universe,
                        std::vector<int> members) {
  members = sorted_unique(std::move(members));
  require_positive_players(members);
  if (!universe.is_finite()) {
    return Coalition(false, std::move(members));
  }
  boost::dynamic_bitset<> bits(static_cast<std::size_t>(universe.size()));
  for (int p : members) {
    if (p > universe.size()) {
      throw std::invalid_argument("player " + std::to_string(p) +
                                  " is outside the universe of size " +
                                  std::to_string(universe.size()));
    }
    bits.set(static_cast<std::size_t>(p - 1));
  }
  return Coalition(universe, std::move(bits));
}

Coalition Coalition::cofinite(std::vector<int> excluded) {
  excluded = sorted_unique(std::move(excluded));
  require_positive_players(excluded);
  return Coalition(true, std::move(excluded));
}

Coalition Coalition::empty(const PlayerUniverse& universe) {
  return Coalition::of(universe, {});
}

Coalition Coalition::grand(const PlayerUniverse& universe) {
  if (!universe.is_finite()) {
    return Coalition::cofinite({});
  }
  boost::dynamic_bitset<> bits(static_cast<std::size_t>(universe.size()));
  bits.set();
  return Coalition(universe, std::move(bits));
}

bool Coalition::contains(int player) const {
  if (player < 1) return false;
  if (universe_.is_finite()) {
    if (player > universe_.size()) return false;
    return bits_.test(static_cast<std::size_t>(player - 1));
  }
  return cofinite_ ? !vec_contains(described_, player)
                   : vec_contains(described_, player);
}

bool Coalition::is_empty() const {
  if (universe_.is_finite()) return bits_.none();
  return !cofinite_ && described_.empty();
}

bool Coalition::is_grand() const {
  if (universe_.is_finite()) return bits_.all();
  return cofinite_ && described_.empty();
}

bool Coalition::is_cofinite() const {
  if (universe_.is_finite()) {
    throw UnsupportedOperationError(
        "cofiniteness is a countable-universe notion");
  }
  return cofinite_;
}

std::vector<int> Coalition::members() const {
  if (universe_.is_finite()) {
    std::vector<int> out;
    for (std::size_t i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits_.find_next(i)) {
      out.push_back(static_cast<int>(i) + 1);
    }
    return out;
  }
  if (cofinite_) {
    throw UnsupportedOperationError("a cofinite set has no finite member list");
  }
  return described_;
}

const std::vector<int>& Coalition::descriptor() const {
  if (universe_.is_finite()) {
    throw UnsupportedOperationError(
        "finite-universe coalitions carry bits, not descriptors");
  }
  return described_;
}

const boost::dynamic_bitset<>& Coalition::bits() const {
  if (!universe_.is_finite()) {
    throw UnsupportedOperationError(
        "countable-universe coalitions carry descriptors, not bits");
  }
  return bits_;
}

Coalition operator|(const Coalition& a, const Coalition& b) {
  require_same_universe(a, b);
  if (a.universe_.is_finite()) {
    return Coalition(a.universe_, a.bits_ | b.bits_);
  }
  if (!a.cofinite_ && !b.cofinite_) {
    return Coalition(false, vec_union(a.described_, b.described_));
  }
  if (a.cofinite_ && b.cofinite_) {
    return Coalition(true, vec_intersection(a.described_, b.described_));
  }
  const Coalition& fin = a.cofinite_ ? b : a;
  const Coalition& cof = a.cofinite_ ? a : b;
  return Coalition(true, vec_difference(cof.described_, fin.described_));
}

Coalition operator&(const Coalition& a, const Coalition& b) {
  require_same_universe(a, b);
  if (a.universe_.is_finite()) {
    return Coalition(a.universe_, a.bits_ & b.bits_);
  }
  if (!a.cofinite_ && !b.cofinite_) {
    return Coalition(false, vec_intersection(a.described_, b.described_));
  }
  if (a.cofinite_ && b.cofinite_) {
    return Coalition(true, vec_union(a.described_, b.described_));
  }
  const Coalition& fin = a.cofinite_ ? b : a;
  const Coalition& cof = a.cofinite_ ? a : b;
  return Coalition(false, vec_difference(fin.described_, cof.described_));
}

Coalition operator~(const Coalition& a) {
  if (a.universe_.is_finite()) {
    return Coalition(a.universe_, ~a.bits_);
  }
  return Coalition(!a.cofinite_, a.described_);
}

bool is_subset(const Coalition& a, const Coalition& b) {
  require_same_universe(a, b);
  if (a.universe_.is_finite()) {
    return (a.bits_ & b.bits_) == a.bits_;
  }
  if (!a.cofinite_ && !b.cofinite_) return vec_subset(a.described_, b.described_);
  if (!a.cofinite_ && b.cofinite_) return vec_disjoint(a.described_, b.described_);
  if (a.cofinite_ && !b.cofinite_) return false;
  return vec_subset(b.described_, a.described_);
}

bool operator==(const Coalition& a, const Coalition& b) {
  if (!(a.universe_ == b.universe_)) return false;
  if (a.universe_.is_finite()) return a.bits_ == b.bits_;
  return a.cofinite_ == b.cofinite_ && a.described_ == b.described_;
}

bool operator<(const Coalition& a, const Coalition& b) {
  // Deterministic total order: finite universes (by size, then by bit
  // pattern as a number) precede the countable universe, where Fin sets
  // precede CoFin sets, each ordered by descriptor size then contents.
  const bool af = a.universe_.is_finite();
  const bool bf = b.universe_.is_finite();
  if (af != bf) return af;
  if (af) {
    if (a.universe_.size() != b.universe_.size()) {
      return a.universe_.size() < b.universe_.size();
    }
    return a.bits_ < b.bits_;
  }
  if (a.cofinite_ != b.cofinite_) return !a.cofinite_;
  if (a.described_.size() != b.described_.size()) {
    return a.described_.size() < b.described_.size();
  }
  return a.described_ < b.described_;
}

// --- CoalitionSystem -----------------------------------------------------

CoalitionSystem::CoalitionSystem(PlayerUniverse universe,
                                 std::vector<Coalition> coalitions)
    : universe_(universe) {
  if (!universe_.is_finite()) {
    throw std::invalid_argument(
        "explicit coalition lists require a finite universe");
  }
  for (const Coalition& c : coalitions) {
    if (!(c.universe() == universe_)) {
      throw UniverseMismatchError("coalition universe differs from the system");
    }
  }
  std::sort(coalitions.begin(), coalitions.end());
  if (std::adjacent_find(coalitions.begin(), coalitions.end()) !=
      coalitions.end()) {
    throw std::invalid_argument("duplicate coalition in system");
  }
  const Coalition empty = Coalition::empty(universe_);
  const Coalition grand = Coalition::grand(universe_);
  if (!std::binary_search(coalitions.begin(), coalitions.end(), grand)) {
    throw std::invalid_argument("the grand coalition is missing");
  }
  if (!std::binary_search(coalitions.begin(), coalitions.end(), empty)) {
    coalitions.insert(coalitions.begin(), empty);
  }
  coalitions_ = std::move(coalitions);
}

CoalitionSystem CoalitionSystem::finite_cofinite_handle() {
  return CoalitionSystem(PlayerUniverse::countable());
}

const std::vector<Coalition>& CoalitionSystem::coalitions() const {
  if (!universe_.is_finite()) {
    throw UnsupportedOperationError(
        "the finite-cofinite system has no explicit coalition list");
  }
  return coalitions_;
}

bool CoalitionSystem::contains(const Coalition& s) const {
  if (!(s.universe() == universe_)) return false;
  if (!universe_.is_finite()) return true;  // every Fin/CoFin descriptor
  return std::binary_search(coalitions_.begin(), coalitions_.end(), s);
}

// --- FieldOfSets ---------------------------------------------------------

FieldOfSets FieldOfSets::from_atoms(PlayerUniverse universe,
                                    std::vector<Coalition> atoms) {
  if (!universe.is_finite()) {
    throw std::invalid_argument("atom partitions require a finite universe");
  }
  boost::dynamic_bitset<> covered(static_cast<std::size_t>(universe.size()));
  for (const Coalition& a : atoms) {
    if (!(a.universe() == universe)) {
      throw UniverseMismatchError("atom universe differs from the field");
    }
    if (a.is_empty()) {
      throw std::invalid_argument("atoms must be nonempty");
    }
    if ((covered & a.bits()).any()) {
      throw std::invalid_argument("atoms must be pairwise disjoint");
    }
    covered |= a.bits();
  }
  if (!covered.all()) {
    throw std::invalid_argument("atoms must cover the universe");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Coalition& x, const Coalition& y) {
              return x.bits().find_first() < y.bits().find_first();
            });
  FieldOfSets field(universe);
  field.atoms_ = std::move(atoms);
  return field;
}

FieldOfSets FieldOfSets::finite_cofinite() {
  return FieldOfSets(PlayerUniverse::countable());
}

const std::vector<Coalition>& FieldOfSets::atoms() const {
  if (!universe_.is_finite()) {
    throw UnsupportedOperationError(
        "the finite-cofinite field has no finite atom list");
  }
  return atoms_;
}

bool FieldOfSets::contains(const Coalition& s) const {
  if (!(s.universe() == universe_)) return false;
  if (!universe_.is_finite()) return true;  // every Fin/CoFin descriptor
  for (const Coalition& a : atoms_) {
    const auto common = a.bits() & s.bits();
    if (common.any() && common != a.bits()) return false;
  }
  return true;
}

bool operator==(const FieldOfSets& a, const FieldOfSets& b) {
  return a.universe_ == b.universe_ && a.atoms_ == b.atoms_;
}

FieldOfSets field_hull(const CoalitionSystem& system) {
  if (!system.universe().is_finite()) {
    throw UnsupportedOperationError(
        "field hull over the countable universe is not computable; use "
        "FieldOfSets::finite_cofinite() for the finite-cofinite field");
  }
  const int n = system.universe().size();
  // Two players share an atom iff every coalition of the system contains
  // both or neither; the hull's atoms are these signature classes.
  std::map<std::vector<bool>, std::vector<int>> classes;
  for (int p = 1; p <= n; ++p) {
    std::vector<bool> signature;
    signature.reserve(system.coalitions().size());
    for (const Coalition& s : system.coalitions()) {
      signature.push_back(s.contains(p));
    }
    classes[signature].push_back(p);
  }
  std::vector<Coalition> atoms;
  atoms.reserve(classes.size());
  for (auto& [signature, players] : classes) {
    atoms.push_back(Coalition::of(system.universe(), players));
  }
  return FieldOfSets::from_atoms(system.universe(), std::move(atoms));
}

// --- SimpleFunction ------------------------------------------------------

void SimpleFunction::add_term(const Coalition& coalition,
                              const Rational& coeff) {
  if (!(coalition.universe() == universe_)) {
    throw UniverseMismatchError("term universe differs from the function");
  }
  auto [it, inserted] = terms_.emplace(coalition, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

Rational SimpleFunction::value_at(int player) const {
  Rational value = 0;
  for (const auto& [coalition, coeff] : terms_) {
    if (coalition.contains(player)) value += coeff;
  }
  return value;
}

SimpleFunction operator+(const SimpleFunction& a, const SimpleFunction& b) {
  SimpleFunction out = a;
  for (const auto& [coalition, coeff] : b.terms_) {
    out.add_term(coalition, coeff);
  }
  return out;
}

SimpleFunction operator-(const SimpleFunction& a, const SimpleFunction& b) {
  SimpleFunction out = a;
  for (const auto& [coalition, coeff] : b.terms_) {
    out.add_term(coalition, -coeff);
  }
  return out;
}

SimpleFunction operator*(const Rational& scale, const SimpleFunction& f) {
  SimpleFunction out(f.universe());
  if (scale == 0) return out;
  for (const auto& [coalition, coeff] : f.terms_) {
    out.add_term(coalition, scale * coeff);
  }
  return out;
}

// --- CanonicalForm -------------------------------------------------------

CanonicalForm CanonicalForm::over_atoms(std::vector<Coalition> atoms,
                                        VectorXq values) {
  if (static_cast<Eigen::Index>(atoms.size()) != values.size()) {
    throw std::invalid_argument("one value per atom required");
  }
  CanonicalForm form;
  form.finite_ = true;
  form.atoms_ = std::move(atoms);
  form.values_ = std::move(values);
  return form;
}

CanonicalForm CanonicalForm::eventual(Rational eventual_value,
                                      std::map<int, Rational> exceptional) {
  CanonicalForm form;
  form.finite_ = false;
  form.eventual_ = std::move(eventual_value);
  // Canonical: keep only genuinely exceptional points.
  for (auto it = exceptional.begin(); it != exceptional.end();) {
    it = (it->second == form.eventual_) ? exceptional.erase(it)
                                        : std::next(it);
  }
  form.exceptional_ = std::move(exceptional);
  return form;
}

bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.finite_ != b.finite_) return false;
  if (a.finite_) {
    if (!(a.atoms_ == b.atoms_)) return false;
    if (a.values_.size() != b.values_.size()) return false;
    for (Eigen::Index i = 0; i < a.values_.size(); ++i) {
      if (a.values_(i) != b.values_(i)) return false;
    }
    return true;
  }
  return a.eventual_ == b.eventual_ && a.exceptional_ == b.exceptional_;
}

CanonicalForm operator+(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.finite_ != b.finite_) {
    throw std::invalid_argument("cannot add forms over different universes");
  }
  if (a.finite_) {
    if (!(a.atoms_ == b.atoms_)) {
      throw std::invalid_argument("cannot add forms over different fields");
    }
    return CanonicalForm::over_atoms(a.atoms_, a.values_ + b.values_);
  }
  std::map<int, Rational> combined;
  for (const auto& [x, v] : a.exceptional_) {
    combined[x] = v + (b.exceptional_.count(x) ? b.exceptional_.at(x)
                                               : b.eventual_);
  }
  for (const auto& [x, v] : b.exceptional_) {
    if (!combined.count(x)) combined[x] = a.eventual_ + v;
  }
  return CanonicalForm::eventual(a.eventual_ + b.eventual_,
                                 std::move(combined));
}

CanonicalForm operator*(const Rational& scale, const CanonicalForm& f) {
  if (f.finite_) {
    return CanonicalForm::over_atoms(f.atoms_, (scale * f.values_).eval());
  }
  std::map<int, Rational> scaled;
  for (const auto& [x, v] : f.exceptional_) scaled[x] = scale * v;
  return CanonicalForm::eventual(scale * f.eventual_, std::move(scaled));
}

// --- canonicalize / sup_norm ---------------------------------------------

CanonicalForm canonicalize(const SimpleFunction& f, const FieldOfSets& field) {
  if (!(f.universe() == field.universe())) {
    throw UniverseMismatchError("function universe differs from the field");
  }
  if (field.is_finite_universe()) {
    for (const auto& [coalition, coeff] : f.terms()) {
      if (!field.contains(coalition)) {
        throw FieldMembershipError(
            "a support coalition is not a member of the field");
      }
    }
    const auto& atoms = field.atoms();
    VectorXq values(static_cast<Eigen::Index>(atoms.size()));
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      // A field member either contains an atom or misses it, so the value
      // on the atom is the pointwise value at any representative.
      const int representative =
          static_cast<int>(atoms[k].bits().find_first()) + 1;
      values(static_cast<Eigen::Index>(k)) = f.value_at(representative);
    }
    return CanonicalForm::over_atoms(atoms, std::move(values));
  }
  // Finite-cofinite field: the eventual value is the sum over cofinite
  // terms (each contains all large players; each Fin term misses them).
  Rational eventual = 0;
  std::set<int> candidates;
  for (const auto& [coalition, coeff] : f.terms()) {
    if (coalition.is_cofinite()) eventual += coeff;
    for (int x : coalition.descriptor()) candidates.insert(x);
  }
  std::map<int, Rational> exceptional;
  for (int x : candidates) {
    Rational v = f.value_at(x);
    if (v != eventual) exceptional[x] = std::move(v);
  }
  return CanonicalForm::eventual(std::move(eventual), std::move(exceptional));
}

Rational sup_norm(const SimpleFunction& f) {
  using boost::multiprecision::abs;
  if (f.universe().is_finite()) {
    Rational best = 0;
    for (int p = 1; p <= f.universe().size(); ++p) {
      best = std::max(best, Rational(abs(f.value_at(p))));
    }
    return best;
  }
  const CanonicalForm form = canonicalize(f, FieldOfSets::finite_cofinite());
  Rational best = abs(form.eventual_value());
  for (const auto& [x, v] : form.exceptional()) {
    best = std::max(best, Rational(abs(v)));
  }
  return best;
}

bool pointwise_equal(const SimpleFunction& a, const SimpleFunction& b) {
  if (!(a.universe() == b.universe())) {
    throw UniverseMismatchError("functions live over different universes");
  }
  if (a.universe().is_finite()) {
    for (int p = 1; p <= a.universe().size(); ++p) {
      if (a.value_at(p) != b.value_at(p)) return false;
    }
    return true;
  }
  const FieldOfSets field = FieldOfSets::finite_cofinite();
  return canonicalize(a, field) == canonicalize(b, field);
}

}  // namespace kore
