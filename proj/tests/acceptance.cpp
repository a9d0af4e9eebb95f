// Acceptance suite: eight criteria, each printing exactly one line,
// [PASS] or [FAIL].  Exit status is the number of failed criteria.
//
// Everything here is exact rational arithmetic; randomized batteries run
// on fixed seeds so the suite is reproducible bit for bit.

#include <kore/charges.hpp>
#include <kore/core.hpp>
#include <kore/infinite.hpp>
#include <kore/lp.hpp>
#include <kore/rational.hpp>
#include <kore/setalgebra.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace kore;

/// Collects requirement outcomes; keeps the first failure for the report.
class Checker {
 public:
  void require(bool ok, const std::string& message) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = message;
    }
  }

  bool passed() const { return failures_ == 0; }
  int checks() const { return checks_; }
  int failures() const { return failures_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

/// Runs one criterion, times it, and prints its single line.  A budget of
/// zero means untimed.  Returns true when the criterion passed.
bool run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(Checker&)>& body) {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& error) {
    check.require(false, std::string("unexpected exception: ") + error.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_seconds > 0) {
    std::ostringstream over;
    over << "exceeded the " << budget_seconds << "s budget (" << seconds
         << "s)";
    check.require(seconds <= budget_seconds, over.str());
  }

  std::ostringstream line;
  line << (check.passed() ? "[PASS] " : "[FAIL] ") << number << ". " << title
       << " (" << check.checks() << " checks, " << std::fixed
       << std::setprecision(2) << seconds << "s)";
  if (!check.passed()) {
    line << " -- " << check.failures()
         << " failed; first: " << check.first_failure();
  }
  std::cout << line.str() << "\n";
  return check.passed();
}

std::string at_trial(const std::string& what, int trial) {
  std::ostringstream out;
  out << what << " (trial " << trial << ")";
  return out.str();
}

SimpleFunction grand_indicator(const PlayerUniverse& universe) {
  SimpleFunction f(universe);
  f.add_term(Coalition::grand(universe), Rational(1));
  return f;
}

/// The finite optimum of the nonnegative-cone balancedness program, read
/// off the verdict (that cone is always feasible and bounded).
Rational nonneg_cone_optimum(const BalancednessVerdict& verdict, Checker& check,
                             int trial) {
  if (const auto* balanced = std::get_if<BalancedVerdict>(&verdict)) {
    return balanced->optimal_value;
  }
  if (const auto* unbalanced = std::get_if<UnbalancedVerdict>(&verdict)) {
    return unbalanced->value;
  }
  check.require(false,
                at_trial("the nonnegative cone reported an unbounded "
                         "violation, which it cannot",
                         trial));
  return Rational(0);
}

void check_emptiness_certificate(const FiniteGame& game,
                                 const EmptinessCertificate& certificate,
                                 Checker& check, int trial) {
  for (const auto& [coalition, weight] : certificate.weights.weights) {
    check.require(game.system().contains(coalition),
                  at_trial("certificate weight outside the system", trial));
    check.require(weight >= 0,
                  at_trial("negative certificate weight", trial));
  }
  check.require(pointwise_equal(coalition_cover(certificate.weights),
                                grand_indicator(game.universe())),
                at_trial("certificate cover is not the grand indicator",
                         trial));
  check.require(weighted_worth(certificate.weights, game) == certificate.value,
                at_trial("certificate value differs from its worth", trial));
  check.require(certificate.value > game.grand_value(),
                at_trial("certificate worth does not exceed v(N)", trial));
}

/// Criterion 3/5 shared state: the nonnegative-cone optimum per window
/// size of the co-singleton ladder.
std::map<int, Rational> ladder_optima;

}  // namespace

int main() {
  std::vector<FiniteGame> suite_games;
  int failed = 0;

  // -------------------------------------------------------------------
  failed += !run_criterion(
      1,
      "random games: core nonempty iff covering optimum <= v(N); charges "
      "and emptiness certificates re-validate",
      30.0, [&suite_games](Checker& check) {
        std::mt19937_64 rng(20260819u);
        const int total = 220;
        int nonempty_seen = 0;
        int empty_seen = 0;
        for (int trial = 0; trial < total; ++trial) {
          const int n = 2 + trial % 3;
          FiniteGame game = oracles::random_game(rng, n);
          const Rational optimum = nonneg_cone_optimum(
              check_balanced(game, BalancednessVariant::SchmeidlerNonNeg),
              check, trial);
          const CoreResult result = find_core_element(game);
          const bool nonempty = std::holds_alternative<FiniteCharge>(result);
          check.require(nonempty == (optimum <= game.grand_value()),
                        at_trial("core existence disagrees with the "
                                 "covering optimum",
                                 trial));
          if (nonempty) {
            ++nonempty_seen;
            const auto& charge = std::get<FiniteCharge>(result);
            check.require(
                check_core_membership(game, charge).member,
                at_trial("returned charge fails membership", trial));
          } else {
            ++empty_seen;
            check_emptiness_certificate(
                game, std::get<EmptinessCertificate>(result), check, trial);
          }
          suite_games.push_back(std::move(game));
        }
        check.require(nonempty_seen > 0 && empty_seen > 0,
                      "the battery must exercise both outcomes");
      });

  // -------------------------------------------------------------------
  failed += !run_criterion(
      2,
      "the nonnegative and grand-free weight cones agree on every game "
      "from criterion 1",
      0.0, [&suite_games](Checker& check) {
        check.require(!suite_games.empty(),
                      "criterion 1 produced no games to compare");
        for (std::size_t trial = 0; trial < suite_games.size(); ++trial) {
          const FiniteGame& game = suite_games[trial];
          const BalancednessVerdict nonneg =
              check_balanced(game, BalancednessVariant::SchmeidlerNonNeg);
          const BalancednessVerdict grand_free =
              check_balanced(game, BalancednessVariant::GrandFree);
          const bool nonneg_balanced =
              std::holds_alternative<BalancedVerdict>(nonneg);
          const bool free_balanced =
              std::holds_alternative<BalancedVerdict>(grand_free);
          check.require(nonneg_balanced == free_balanced,
                        at_trial("the two cones disagree on balancedness",
                                 static_cast<int>(trial)));
          if (free_balanced) {
            check.require(
                std::get<BalancedVerdict>(grand_free).optimal_value ==
                    game.grand_value(),
                at_trial("grand-free optimum of a balanced game is not v(N)",
                         static_cast<int>(trial)));
          }
        }
      });

  // -------------------------------------------------------------------
  failed += !run_criterion(
      3,
      "co-singleton ladder m=2..8: nonnegative optimum m/(m-1) exactly; "
      "grand-free cone unbounded with a verified ray",
      10.0, [](Checker& check) {
        const FinCofGame game = co_singleton_game(1);
        for (int m = 2; m <= 8; ++m) {
          const FiniteGame window = truncate(game, m);
          const BalancednessVerdict verdict =
              check_balanced(window, BalancednessVariant::SchmeidlerNonNeg);
          const auto* unbalanced = std::get_if<UnbalancedVerdict>(&verdict);
          check.require(unbalanced != nullptr,
                        at_trial("window is not unbalanced", m));
          if (unbalanced == nullptr) continue;
          check.require(unbalanced->value == Rational(m, m - 1),
                        at_trial("optimum is not m/(m-1)", m));
          ladder_optima[m] = unbalanced->value;

          const BalancednessVerdict free_verdict =
              check_balanced(window, BalancednessVariant::GrandFree);
          const auto* violation =
              std::get_if<UnboundedViolationVerdict>(&free_verdict);
          check.require(violation != nullptr,
                        at_trial("grand-free cone is not unbounded", m));
          if (violation == nullptr) continue;
          const Coalition grand = Coalition::grand(window.universe());
          for (const WeightSystem* part :
               {&violation->base, &violation->ray}) {
            for (const auto& [coalition, weight] : part->weights) {
              check.require(window.system().contains(coalition),
                            at_trial("ray weight outside the system", m));
              if (!(coalition == grand)) {
                check.require(weight >= 0,
                              at_trial("negative non-grand weight", m));
              }
            }
          }
          check.require(
              pointwise_equal(coalition_cover(violation->base),
                              grand_indicator(window.universe())),
              at_trial("base does not cover the grand coalition", m));
          check.require(
              pointwise_equal(coalition_cover(violation->ray),
                              SimpleFunction(window.universe())),
              at_trial("ray cover is not identically zero", m));
          check.require(weighted_worth(violation->ray, window) > 0,
                        at_trial("ray worth is not positive", m));
        }
      });

  // -------------------------------------------------------------------
  failed += !run_criterion(
      4,
      "certificate net: worth 2 at every stage; sigma-additive test "
      "charges stop deviating past their support; the pure tail never does",
      0.0, [](Checker& check) {
        const FinCofGame game = co_singleton_game(1);
        const CertificateNet net = co_singleton_net();
        const std::vector<FinCofCharge> charges = default_test_charges();
        const FinCofCharge pure_tail({}, Rational(1));
        for (int stage = 2; stage <= 50; ++stage) {
          const WeightSystem weights = net.at(stage);
          check.require(weighted_worth(weights, game) == Rational(2),
                        at_trial("stage worth is not 2", stage));
          const SimpleFunction cover = coalition_cover(weights);
          for (std::size_t c = 0; c < charges.size(); ++c) {
            const FinCofCharge& mu = charges[c];
            check.require(is_sigma_additive(mu),
                          at_trial("default charge is not sigma-additive",
                                   static_cast<int>(c)));
            if (stage > mu.max_support()) {
              check.require(
                  functional(mu, cover) == mu.total(),
                  at_trial("deviation persists past the support", stage));
            }
          }
          check.require(
              functional(pure_tail, cover) - pure_tail.total() == Rational(1),
              at_trial("pure-tail deviation is not 1", stage));
        }
      });

  // -------------------------------------------------------------------
  failed += !run_criterion(
      5,
      "grand-weight elimination: cover and worth identities on 100 random "
      "systems; net stages land on the ladder optima",
      0.0, [](Checker& check) {
        std::mt19937_64 rng(0xe11bu);
        for (int trial = 0; trial < 100; ++trial) {
          const int n = 2 + trial % 4;
          const PlayerUniverse universe = PlayerUniverse::finite(n);
          const Coalition grand = Coalition::grand(universe);
          std::vector<Coalition> coalitions;
          std::map<Coalition, Rational> worths;
          WeightSystem lambda{universe, {}};
          for (const std::uint32_t mask :
               oracles::random_subsystem(rng, n, 70)) {
            Coalition s = oracles::mask_to_coalition(universe, mask);
            if (mask != 0) {
              worths.emplace(s, oracles::random_rational(rng, -2, 4, 3));
              if (s == grand) {
                lambda.weights.emplace(s,
                                       oracles::random_rational(rng, -3, 0, 2));
              } else {
                lambda.weights.emplace(s,
                                       oracles::random_rational(rng, 0, 3, 3));
              }
            }
            coalitions.push_back(std::move(s));
          }
          const FiniteGame game(CoalitionSystem(universe, coalitions),
                                worths);
          const Rational grand_weight = lambda.weights.at(grand);
          const Rational scale = Rational(1) - grand_weight;
          const WeightSystem rescaled = eliminate_grand_weight(lambda);
          check.require(rescaled.weights.find(grand) ==
                            rescaled.weights.end(),
                        at_trial("grand weight survived elimination", trial));
          SimpleFunction expected_cover =
              (Rational(1) / scale) *
              (coalition_cover(lambda) -
               grand_weight * grand_indicator(universe));
          check.require(pointwise_equal(coalition_cover(rescaled),
                                        expected_cover),
                        at_trial("cover identity broken", trial));
          check.require(
              weighted_worth(rescaled, game) ==
                  (weighted_worth(lambda, game) -
                   grand_weight * game.grand_value()) /
                      scale,
              at_trial("worth identity broken", trial));
        }

        const FinCofGame game = co_singleton_game(1);
        const CertificateNet net = co_singleton_net();
        check.require(!ladder_optima.empty(),
                      "criterion 3 recorded no ladder optima");
        for (int stage = 2; stage <= 50; ++stage) {
          const WeightSystem rescaled = eliminate_grand_weight(net.at(stage));
          const Rational worth = weighted_worth(rescaled, game);
          check.require(worth == Rational(stage, stage - 1),
                        at_trial("rescaled stage worth is not i/(i-1)",
                                 stage));
          const auto rung = ladder_optima.find(stage);
          if (rung != ladder_optima.end()) {
            check.require(worth == rung->second,
                          at_trial("rescaled worth misses the ladder optimum",
                                   stage));
          }
        }
      });

  // -------------------------------------------------------------------
  failed += !run_criterion(
      6,
      "sigma probe: co-singleton game infeasible within every window "
      "s=1..20 at depths 1..3, with verified aggregation",
      10.0, [](Checker& check) {
        const FinCofGame game = co_singleton_game(1);
        for (int window = 1; window <= 20; ++window) {
          for (int depth = 1; depth <= 3; ++depth) {
            const int tag = window * 10 + depth;
            const SigmaProbeResult result =
                sigma_core_probe(game, window, depth);
            const auto* infeasible =
                std::get_if<SigmaProbeInfeasible>(&result);
            check.require(infeasible != nullptr,
                          at_trial("probe found the cone feasible", tag));
            if (infeasible == nullptr) continue;
            check.require(infeasible->window == window &&
                              infeasible->depth == depth,
                          at_trial("probe echoed the wrong window", tag));
            for (int player = 1; player <= window; ++player) {
              Rational coefficient = infeasible->efficiency_multiplier;
              for (const auto& [coalition, multiplier] :
                   infeasible->multipliers) {
                check.require(multiplier >= 0,
                              at_trial("negative probe multiplier", tag));
                if (coalition.contains(player)) coefficient += multiplier;
              }
              check.require(coefficient == 0,
                            at_trial("aggregation fails to cancel an atom",
                                     tag));
            }
            Rational aggregate =
                infeasible->efficiency_multiplier * game.grand_value();
            for (const auto& [coalition, multiplier] :
                 infeasible->multipliers) {
              aggregate += multiplier * game.value(coalition);
            }
            check.require(aggregate == infeasible->gap && infeasible->gap > 0,
                          at_trial("aggregate worth does not show the gap",
                                   tag));
          }
        }
      });

  // -------------------------------------------------------------------
  failed += !run_criterion(
      7,
      "solver self-verification on 520 random programs across all three "
      "outcome classes; primal equals dual value on the bounded ones",
      0.0, [](Checker& check) {
        std::mt19937_64 rng(0x1f2e3du);
        std::uniform_int_distribution<int> sign_die(0, 2);
        int optimal_seen = 0;
        int unbounded_seen = 0;
        int infeasible_seen = 0;
        const int total = 520;
        for (int trial = 0; trial < total; ++trial) {
          const int rows = 1 + trial % 3;
          const int cols = rows + 1 + trial % 4;
          RationalLP lp;
          lp.sense = (trial % 2 == 0) ? Sense::Maximize : Sense::Minimize;
          lp.constraints = MatrixXq::Zero(rows, cols);
          lp.rhs = VectorXq::Zero(rows);
          lp.objective = VectorXq::Zero(cols);
          for (int r = 0; r < rows; ++r) {
            lp.rhs(r) = oracles::random_rational(rng, -2, 2, 2);
            for (int c = 0; c < cols; ++c) {
              lp.constraints(r, c) = oracles::random_rational(rng, -2, 2, 2);
            }
          }
          for (int c = 0; c < cols; ++c) {
            lp.objective(c) = oracles::random_rational(rng, -3, 3, 2);
            lp.signs.push_back(sign_die(rng) == 0 ? VarSign::Free
                                                  : VarSign::NonNegative);
            lp.variable_names.push_back("x" + std::to_string(c));
          }
          lp.validate();
          const LPOutcome outcome = solve(lp);
          check.require(verify(lp, outcome),
                        at_trial("outcome failed verification", trial));
          if (const auto* optimal = std::get_if<OptimalOutcome>(&outcome)) {
            ++optimal_seen;
            check.require(lp.objective.dot(optimal->primal) == optimal->value,
                          at_trial("primal value mismatch", trial));
            check.require(optimal->dual.dot(lp.rhs) == optimal->value,
                          at_trial("dual value mismatch", trial));
          } else if (std::holds_alternative<UnboundedOutcome>(outcome)) {
            ++unbounded_seen;
          } else {
            ++infeasible_seen;
          }
        }
        check.require(total >= 500, "battery must cover at least 500 programs");
        check.require(
            optimal_seen > 0 && unbounded_seen > 0 && infeasible_seen > 0,
            "all three outcome classes must occur");
      });

  // -------------------------------------------------------------------
  failed += !run_criterion(
      8,
      "hull matches brute-force closure (size 2^atoms); charges are "
      "modular; sigma-additivity, zero tail and continuity coincide",
      0.0, [](Checker& check) {
        std::mt19937_64 rng(0x8a8a8au);

        for (int trial = 0; trial < 120; ++trial) {
          const int n = 2 + trial % 4;
          const PlayerUniverse universe = PlayerUniverse::finite(n);
          const std::set<std::uint32_t> masks =
              oracles::random_subsystem(rng, n, 40);
          std::vector<Coalition> coalitions;
          for (const std::uint32_t mask : masks) {
            coalitions.push_back(oracles::mask_to_coalition(universe, mask));
          }
          const FieldOfSets hull =
              field_hull(CoalitionSystem(universe, coalitions));
          const std::set<std::uint32_t> closure =
              oracles::field_closure(n, masks);
          const std::vector<std::uint32_t> atoms =
              oracles::closure_atoms(n, closure);
          check.require(hull.atom_count() == atoms.size(),
                        at_trial("atom count mismatch", trial));
          check.require(closure.size() ==
                            (std::size_t{1} << atoms.size()),
                        at_trial("closure size is not 2^atoms", trial));
          if (hull.atom_count() == atoms.size()) {
            for (std::size_t k = 0; k < atoms.size(); ++k) {
              check.require(
                  hull.atoms()[k] ==
                      oracles::mask_to_coalition(universe, atoms[k]),
                  at_trial("atom mismatch against the oracle", trial));
            }
          }
        }

        std::uniform_int_distribution<int> player_die(1, 9);
        std::uniform_int_distribution<int> size_die(0, 4);
        std::uniform_int_distribution<int> side_die(0, 1);
        const auto random_fincof_coalition = [&rng, &player_die,
                                              &size_die, &side_die]() {
          std::set<int> described;
          const int size = size_die(rng);
          while (static_cast<int>(described.size()) < size) {
            described.insert(player_die(rng));
          }
          const std::vector<int> list(described.begin(), described.end());
          return side_die(rng) == 0
                     ? Coalition::of(PlayerUniverse::countable(), list)
                     : Coalition::cofinite(list);
        };
        const auto random_charge = [&rng, &player_die, &size_die](bool tail) {
          std::map<int, Rational> atoms;
          const int support = size_die(rng);
          for (int k = 0; k < support; ++k) {
            atoms[player_die(rng)] = oracles::random_rational(rng, -2, 3, 3);
          }
          return FinCofCharge(std::move(atoms),
                              tail ? oracles::random_rational(rng, 1, 2, 3)
                                   : Rational(0));
        };

        for (int trial = 0; trial < 500; ++trial) {
          const FinCofCharge mu = random_charge(trial % 2 == 0);
          const Coalition a = random_fincof_coalition();
          const Coalition b = random_fincof_coalition();
          check.require(mu(a | b) + mu(a & b) == mu(a) + mu(b),
                        at_trial("modularity broken", trial));
        }

        for (int trial = 0; trial < 60; ++trial) {
          const FinCofCharge mu = random_charge(trial % 2 == 0);
          const bool sigma = is_sigma_additive(mu);
          check.require(sigma == (mu.tail() == 0),
                        at_trial("sigma-additivity disagrees with the tail",
                                 trial));
          const ContinuityReport up =
              continuity_probe(mu, increasing_prefixes());
          const ContinuityReport down =
              continuity_probe(mu, decreasing_tails());
          check.require((up.continuous && down.continuous) == sigma,
                        at_trial("continuity probes disagree with "
                                 "sigma-additivity",
                                 trial));
        }
      });

  std::cout << (failed == 0 ? "acceptance: all 8 criteria passed"
                            : "acceptance: criteria failed")
            << "\n";
  return failed;
}
