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

#ifndef KORE_INFINITE_HPP
#define KORE_INFINITE_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kore/core.hpp"

namespace kore {

/// A game on the finite-cofinite field over {1, 2, 3, ...}: a worth rule
/// on Fin/CoFin coalitions plus an explicit grand-coalition value.  The
/// rule is consulted for coalitions other than the empty set (always worth
/// zero) and N (worth `grand`).
class FinCofGame {
 public:
  FinCofGame(std::function<Rational(const Coalition&)> rule, Rational grand);

  Rational value(const Coalition& s) const;
  const Rational& grand_value() const { return grand_; }

 private:
  std::function<Rational(const Coalition&)> rule_;
  Rational grand_;
};

/// The co-singleton family: worth 1 on every cofinite coalition missing at
/// most `threshold` players, 0 elsewhere; v(N) = grand.  With threshold 1
/// this is the classic game whose countably-additive core is empty even
/// though every charge core argument fails only in the tail.
FinCofGame co_singleton_game(int threshold, Rational grand = Rational(1));

/// Additive game from finitely supported player weights: v(S) = sum of the
/// weights of S's members, v(N) = total weight.  Balanced at every
/// truncation that contains the support.
FinCofGame additive_fincof_game(std::map<int, Rational> weights);

/// Worth-by-descriptor-size lookup table: cofinite coalitions read
/// `cof_by_size` at their excluded count, finite ones read `fin_by_size`
/// at their member count (missing sizes are worth 0), and explicit
/// exceptional coalitions override both.
FinCofGame table_game(std::map<int, Rational> cof_by_size,
                      std::map<int, Rational> fin_by_size,
                      std::map<Coalition, Rational> exceptions,
                      Rational grand);

enum class TruncationMode { FullPowerSet, Sparse };

/// Finite shadow of the game on the window {1, ..., m}: a coalition
/// S of the window is read as the cofinite set missing exactly the
/// window's complement of S, so window co-singletons inherit the worth of
/// cofinite co-singletons.  FullPowerSet admits every subset (capped at
/// full_cap players, since the LP grows a column per subset); Sparse
/// admits the empty set, N, singletons and co-singletons only.
FiniteGame truncate(const FinCofGame& game, int m,
                    TruncationMode mode = TruncationMode::FullPowerSet,
                    int full_cap = 10);

/// One truncation's balancedness result.
struct TruncationReport {
  int m = 0;
  BalancednessVariant variant = BalancednessVariant::SchmeidlerNonNeg;
  BalancednessVerdict verdict;
  /// Finite LP optimum when one exists (absent for unbounded violations).
  std::optional<Rational> optimum;
};

struct TruncationStudy {
  std::vector<TruncationReport> reports;  // ascending m
  Rational grand_value;
  bool optima_nonincreasing = true;       // over the reported finite optima
  std::optional<Rational> final_gap;      // |last optimum - v(N)|
};

/// Balancedness of every truncation m_from..m_to under one weight-cone
/// variant.  The per-m solves are independent and run concurrently; the
/// reports are merged in ascending m regardless.
TruncationStudy truncation_study(const FinCofGame& game, int m_from, int m_to,
                                 BalancednessVariant variant,
                                 TruncationMode mode = TruncationMode::FullPowerSet,
                                 int full_cap = 10);

/// A net of weight systems indexed by i = 1, 2, ...; the vehicle for
/// writing violation certificates that no single finite stage exhibits.
struct CertificateNet {
  std::function<WeightSystem(int)> at;
};

/// Stage i of the canonical violation net for the co-singleton game:
/// weight 1 on each co-singleton N \ {n}, n = 1..i, and -(i-2) on N.  The
/// cover is 2 chi_N - chi_{1..i} and the worth is 2 at every stage.
WeightSystem co_singleton_certificate(int i);
CertificateNet co_singleton_net();

/// sum lambda_S v(S) against a finite-cofinite game.
Rational weighted_worth(const WeightSystem& weights, const FinCofGame& game);

/// How one test charge fared against the net.
struct NetChargeTrace {
  FinCofCharge charge;
  bool admissible = false;  ///< sigma-additive; inadmissible ones are kept
  std::string note;         ///< rejection explanation when not admissible
  /// functional(mu, cover of net(i)) - mu(N), per stage i = 1..horizon.
  std::vector<Rational> deviations;
  int vanished_from = 0;    ///< first stage from which deviations stay 0
};

struct NetReport {
  int horizon = 0;
  Rational grand_value;
  std::vector<Rational> worths;        ///< worth of net(i), i = 1..horizon
  std::optional<Rational> worth_limit;  ///< stabilized worth, when observed
  std::vector<NetChargeTrace> traces;
  /// True when the worth stabilizes above v(N) while every sigma-additive
  /// test charge's deviations vanish beyond its support: no
  /// countably-additive charge can satisfy all core constraints at once.
  bool violation_witnessed = false;
};

/// Evaluate the net against the game and the test charges up to the given
/// horizon.  Non-sigma-additive charges are not errors: they are traced
/// and rejected with an explanation (their deviation keeps the tail
/// offset), which is exactly the boundary the construction probes.
NetReport verify_certificate_net(const FinCofGame& game,
                                 const CertificateNet& net,
                                 const std::vector<FinCofCharge>& test_charges,
                                 int horizon);

/// Diracs at players 1..10 plus two finitely supported charges; all
/// sigma-additive.
std::vector<FinCofCharge> default_test_charges();

struct SigmaProbeFeasible {
  FinCofCharge charge;
};

/// Farkas-style aggregation witnessing that no sigma-additive charge
/// supported on {1..window} satisfies the depth-bounded core constraints:
/// the multipliers combine  mu(S) >= v(S)  rows and the efficiency
/// equality into  0 > 0-style contradiction with gap > 0.
struct SigmaProbeInfeasible {
  int window = 0;
  int depth = 0;
  std::vector<std::pair<Coalition, Rational>> multipliers;  // nonzero only
  Rational efficiency_multiplier;
  Rational gap;  ///< aggregated worth minus what the rows can deliver; > 0
};

using SigmaProbeResult = std::variant<SigmaProbeFeasible, SigmaProbeInfeasible>;

/// Search for a sigma-additive core charge with support inside
/// {1..window}, against every core constraint generated by coalitions
/// whose descriptor (member list or excluded list within the window) has
/// size at most depth, plus efficiency.  Exact: returns either a feasible
/// charge or verified infeasibility multipliers.
SigmaProbeResult sigma_core_probe(const FinCofGame& game, int window,
                                  int depth);

}  // namespace kore

#endif  // KORE_INFINITE_HPP
