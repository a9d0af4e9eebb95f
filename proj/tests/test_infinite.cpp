#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "kore/infinite.hpp"
#include "oracles.hpp"

using kore::BalancedVerdict;
using kore::BalancednessVariant;
using kore::Coalition;
using kore::FinCofCharge;
using kore::FinCofGame;
using kore::FiniteGame;
using kore::PlayerUniverse;
using kore::Rational;
using kore::TruncationMode;
using kore::UnbalancedVerdict;
using kore::UnboundedViolationVerdict;
using kore::WeightSystem;

namespace {

const PlayerUniverse kCountable = PlayerUniverse::countable();

Coalition fin(std::vector<int> members) {
  return Coalition::of(kCountable, std::move(members));
}

}  // namespace

TEST_CASE("co-singleton game worths") {
  const FinCofGame game = kore::co_singleton_game(1);
  CHECK(game.value(Coalition::cofinite({7})) == 1);
  CHECK(game.value(Coalition::cofinite({2, 9})) == 0);  // misses two
  CHECK(game.value(Coalition::cofinite({})) == 1);      // N itself
  CHECK(game.value(fin({1, 2, 3})) == 0);
  CHECK(game.value(fin({})) == 0);
  CHECK(game.grand_value() == 1);

  const FinCofGame wide = kore::co_singleton_game(2);
  CHECK(wide.value(Coalition::cofinite({2, 9})) == 1);
  CHECK(wide.value(Coalition::cofinite({2, 9, 11})) == 0);

  const FinCofGame none = kore::co_singleton_game(0);
  CHECK(none.value(Coalition::cofinite({7})) == 0);
  CHECK(none.grand_value() == 1);

  CHECK_THROWS_AS(
      game.value(Coalition::of(PlayerUniverse::finite(3), {1})),
      kore::UniverseMismatchError);
}

TEST_CASE("additive and table games") {
  const FinCofGame additive = kore::additive_fincof_game(
      {{1, Rational(1, 2)}, {2, Rational(1, 3)}});
  CHECK(additive.value(fin({1})) == Rational(1, 2));
  CHECK(additive.value(fin({1, 2})) == Rational(5, 6));
  CHECK(additive.value(fin({5}))   == 0);
  CHECK(additive.value(Coalition::cofinite({1})) == Rational(1, 3));
  CHECK(additive.value(Coalition::cofinite({5}))  == Rational(5, 6));
  CHECK(additive.grand_value() == Rational(5, 6));

  const FinCofGame table = kore::table_game(
      /*cof_by_size=*/{{1, Rational(1)}},
      /*fin_by_size=*/{{2, Rational(1, 4)}},
      /*exceptions=*/{{Coalition::cofinite({2}), Rational(5)}},
      /*grand=*/Rational(1));
  CHECK(table.value(Coalition::cofinite({1})) == 1);   // size table
  CHECK(table.value(Coalition::cofinite({2})) == 5);   // exception wins
  CHECK(table.value(fin({3, 4})) == Rational(1, 4));   // finite size table
  CHECK(table.value(fin({3})) == 0);                   // missing size -> 0
  CHECK(table.value(Coalition::cofinite({1, 2})) == 0);
}

TEST_CASE("truncation reads window coalitions as cofinite sets") {
  const FinCofGame game = kore::co_singleton_game(1);
  const FiniteGame window = kore::truncate(game, 3);
  const PlayerUniverse u = window.universe();
  REQUIRE(u.size() == 3);
  // Window co-singletons inherit worth 1 from the cofinite co-singletons.
  CHECK(window.value(Coalition::of(u, {2, 3})) == 1);
  CHECK(window.value(Coalition::of(u, {1, 3})) == 1);
  CHECK(window.value(Coalition::of(u, {1, 2})) == 1);
  // Everything smaller misses at least two players of N.
  CHECK(window.value(Coalition::of(u, {1})) == 0);
  CHECK(window.value(Coalition::empty(u)) == 0);
  CHECK(window.grand_value() == 1);
  CHECK(window.system().coalitions().size() == 8);

  SUBCASE("sparse mode keeps empty, N, singletons and co-singletons") {
    const FiniteGame sparse =
        kore::truncate(game, 5, TruncationMode::Sparse);
    // 1 empty + 1 grand + 5 singletons + 5 co-singletons.
    CHECK(sparse.system().coalitions().size() == 12);
    const FiniteGame tiny = kore::truncate(game, 2, TruncationMode::Sparse);
    // At m = 2 singletons and co-singletons coincide: {empty, {1}, {2}, N}.
    CHECK(tiny.system().coalitions().size() == 4);
  }

  SUBCASE("full mode is capped, with a pointer to sparse mode") {
    CHECK_THROWS_WITH_AS(kore::truncate(game, 11), doctest::Contains("sparse"),
                         std::invalid_argument);
    CHECK_NOTHROW(kore::truncate(game, 11, TruncationMode::Sparse));
    CHECK_NOTHROW(kore::truncate(game, 11, TruncationMode::FullPowerSet,
                                 /*full_cap=*/12));
  }
}

TEST_CASE("truncation ladder: optimum m/(m-1), decreasing toward v(N)") {
  const FinCofGame game = kore::co_singleton_game(1);
  const kore::TruncationStudy study = kore::truncation_study(
      game, 2, 6, BalancednessVariant::SchmeidlerNonNeg);
  REQUIRE(study.reports.size() == 5);
  for (const auto& report : study.reports) {
    REQUIRE(report.optimum.has_value());
    CHECK(*report.optimum == Rational(report.m, report.m - 1));
    const auto& unbalanced = std::get<UnbalancedVerdict>(report.verdict);
    CHECK(unbalanced.value == *report.optimum);
  }
  CHECK(study.grand_value == 1);
  CHECK(study.optima_nonincreasing);
  REQUIRE(study.final_gap.has_value());
  CHECK(*study.final_gap == Rational(1, 5));  // 6/5 - 1

  SUBCASE("independent optimum via vertex enumeration, m = 2..4") {
    for (int m = 2; m <= 4; ++m) {
      const auto program =
          oracles::covering_program(kore::truncate(game, m));
      const auto oracle =
          oracles::vertex_enumeration_max(program.a, program.b, program.c);
      REQUIRE(oracle.has_value());
      CHECK(*oracle == Rational(m, m - 1));
    }
  }

  SUBCASE("sparse mode reaches the same optima far beyond the cap") {
    const kore::TruncationStudy sparse = kore::truncation_study(
        game, 2, 30, BalancednessVariant::SchmeidlerNonNeg,
        TruncationMode::Sparse);
    for (const auto& report : sparse.reports) {
      REQUIRE(report.optimum.has_value());
      CHECK(*report.optimum == Rational(report.m, report.m - 1));
    }
  }
}

TEST_CASE("grand-free truncations blow up: unbounded violation at every m") {
  const FinCofGame game = kore::co_singleton_game(1);
  const kore::TruncationStudy study = kore::truncation_study(
      game, 2, 6, BalancednessVariant::GrandFree);
  for (const auto& report : study.reports) {
    CHECK_FALSE(report.optimum.has_value());
    const auto& violation =
        std::get<UnboundedViolationVerdict>(report.verdict);
    // Re-derive the ray conditions directly.
    const FiniteGame window = kore::truncate(game, report.m);
    kore::SimpleFunction chi_n(window.universe());
    chi_n.add_term(Coalition::grand(window.universe()), 1);
    CHECK(kore::pointwise_equal(kore::coalition_cover(violation.base), chi_n));
    CHECK(kore::pointwise_equal(kore::coalition_cover(violation.ray),
                                kore::SimpleFunction(window.universe())));
    CHECK(kore::weighted_worth(violation.ray, window) > 0);
  }
  CHECK_FALSE(study.final_gap.has_value());
}

TEST_CASE("additive games stay balanced at every truncation") {
  const FinCofGame game = kore::additive_fincof_game(
      {{1, Rational(1, 2)}, {3, Rational(1, 2)}});
  for (const auto mode : {TruncationMode::FullPowerSet, TruncationMode::Sparse}) {
    const kore::TruncationStudy study = kore::truncation_study(
        game, 3, 6, BalancednessVariant::SchmeidlerNonNeg, mode);
    for (const auto& report : study.reports) {
      const auto& balanced = std::get<BalancedVerdict>(report.verdict);
      // Once the window covers the support the optimum is v(N) itself.
      CHECK(balanced.optimal_value == game.grand_value());
    }
  }
}

TEST_CASE("certificate net stages: worth 2, cover 2*chi_N - chi_1..i") {
  const FinCofGame game = kore::co_singleton_game(1);
  for (int i = 1; i <= 12; ++i) {
    const WeightSystem stage = kore::co_singleton_certificate(i);
    CHECK(kore::weighted_worth(stage, game) == 2);
    const kore::SimpleFunction cover = kore::coalition_cover(stage);
    for (int x = 1; x <= i + 3; ++x) {
      CHECK(cover.value_at(x) == (x <= i ? 1 : 2));
    }
    // Stage weights: 1 per co-singleton, -(i-2) on N (absent when 0).
    const auto grand_it = stage.weights.find(Coalition::cofinite({}));
    if (i == 2) {
      CHECK(grand_it == stage.weights.end());
    } else {
      REQUIRE(grand_it != stage.weights.end());
      CHECK(grand_it->second == Rational(-(i - 2)));
    }
  }
}

TEST_CASE("net verification: deviations vanish for sigma-additive charges") {
  const FinCofGame game = kore::co_singleton_game(1);
  const auto charges = kore::default_test_charges();
  const kore::NetReport report =
      kore::verify_certificate_net(game, kore::co_singleton_net(), charges, 12);

  CHECK(report.horizon == 12);
  CHECK(report.grand_value == 1);
  REQUIRE(report.worths.size() == 12);
  for (const Rational& worth : report.worths) CHECK(worth == 2);
  REQUIRE(report.worth_limit.has_value());
  CHECK(*report.worth_limit == 2);
  CHECK(report.violation_witnessed);

  REQUIRE(report.traces.size() == charges.size());
  for (const auto& trace : report.traces) {
    CHECK(trace.admissible);
    CHECK(trace.note.empty());
    const int support = trace.charge.max_support();
    REQUIRE(trace.deviations.size() == 12);
    for (int i = 1; i <= 12; ++i) {
      // The deviation at stage i is exactly the charge mass beyond i.
      Rational beyond = 0;
      for (const auto& [player, weight] : trace.charge.atom_weights()) {
        if (player > i) beyond += weight;
      }
      CHECK(trace.deviations[static_cast<std::size_t>(i - 1)] == beyond);
    }
    CHECK(trace.vanished_from >= 1);
    CHECK(trace.vanished_from <= support + 1);
  }
}

TEST_CASE("net verification rejects a pure-tail charge with deviation 1") {
  const FinCofGame game = kore::co_singleton_game(1);
  const FinCofCharge tail({}, Rational(1));
  const kore::NetReport report = kore::verify_certificate_net(
      game, kore::co_singleton_net(), {tail}, 10);
  REQUIRE(report.traces.size() == 1);
  const auto& trace = report.traces[0];
  CHECK_FALSE(trace.admissible);
  CHECK(trace.note.find("tail") != std::string::npos);
  for (const Rational& deviation : trace.deviations) {
    CHECK(deviation == 1);  // 2*mu(N) - mu(Fin{1..i}) - mu(N) = 2 - 0 - 1
  }
  CHECK(trace.vanished_from == 0);
  // A lone inadmissible charge cannot witness the violation.
  CHECK_FALSE(report.violation_witnessed);
}

TEST_CASE("eliminating the net's grand weight lands on the ladder values") {
  const FinCofGame game = kore::co_singleton_game(1);
  for (int i = 2; i <= 50; ++i) {
    const WeightSystem reduced =
        kore::eliminate_grand_weight(kore::co_singleton_certificate(i));
    for (const auto& [coalition, weight] : reduced.weights) {
      (void)coalition;
      CHECK(weight == Rational(1, i - 1));
    }
    CHECK(kore::weighted_worth(reduced, game) == Rational(i, i - 1));
  }
  // ... which is precisely the truncation optimum at window size m = i.
  const kore::TruncationStudy study = kore::truncation_study(
      game, 2, 8, BalancednessVariant::SchmeidlerNonNeg);
  for (const auto& report : study.reports) {
    const WeightSystem reduced = kore::eliminate_grand_weight(
        kore::co_singleton_certificate(report.m));
    CHECK(kore::weighted_worth(reduced, game) == *report.optimum);
  }
}

TEST_CASE("sigma-core probe: co-singleton infeasible, additive feasible") {
  SUBCASE("co-singleton K=1 is infeasible in every window") {
    const FinCofGame game = kore::co_singleton_game(1);
    for (int window = 1; window <= 6; ++window) {
      for (int depth = 1; depth <= 3; ++depth) {
        const auto result = kore::sigma_core_probe(game, window, depth);
        const auto& infeasible =
            std::get<kore::SigmaProbeInfeasible>(result);
        CHECK(infeasible.window == window);
        CHECK(infeasible.depth == depth);
        CHECK(infeasible.gap > 0);
        for (const auto& [coalition, multiplier] : infeasible.multipliers) {
          (void)coalition;
          CHECK(multiplier >= 0);
        }
      }
    }
  }
  SUBCASE("additive game: feasible with the defining weights") {
    const FinCofGame game = kore::additive_fincof_game(
        {{1, Rational(1, 2)}, {2, Rational(1, 2)}});
    const auto result = kore::sigma_core_probe(game, 3, 2);
    const auto& feasible = std::get<kore::SigmaProbeFeasible>(result);
    CHECK(feasible.charge.tail() == 0);
    REQUIRE(feasible.charge.atom_weights().size() == 2);
    CHECK(feasible.charge.atom_weights().at(1) == Rational(1, 2));
    CHECK(feasible.charge.atom_weights().at(2) == Rational(1, 2));
  }
  SUBCASE("worth-1-only-at-N variant is feasible") {
    const FinCofGame game = kore::co_singleton_game(0);
    const auto result = kore::sigma_core_probe(game, 2, 2);
    const auto& feasible = std::get<kore::SigmaProbeFeasible>(result);
    CHECK(kore::is_sigma_additive(feasible.charge));
    CHECK(feasible.charge.total() == 1);
    // Every depth-2 window constraint holds: worths are 0 off N, and a
    // charge with nonnegative support beyond nothing... verify directly on
    // a sample of constraint coalitions.
    for (const Coalition& s :
         {fin({1}), fin({2}), fin({1, 2}), Coalition::cofinite({1}),
          Coalition::cofinite({1, 2})}) {
      CHECK(feasible.charge(s) >= game.value(s));
    }
  }
}

TEST_CASE("default test charges are sigma-additive and cover players 1..10") {
  const auto charges = kore::default_test_charges();
  REQUIRE(charges.size() == 12);
  for (const auto& mu : charges) {
    CHECK(kore::is_sigma_additive(mu));
  }
  // Diracs at 1..10 first.
  for (int player = 1; player <= 10; ++player) {
    CHECK(charges[static_cast<std::size_t>(player - 1)].atom_weights().at(
              player) == 1);
  }
}
