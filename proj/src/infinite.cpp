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

#include "kore/infinite.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

namespace kore {

// --- finite-cofinite games ---------------------------------------------------

FinCofGame::FinCofGame(std::function<Rational(const Coalition&)> rule,
                       Rational grand)
    : rule_(std::move(rule)), grand_(std::move(grand)) {
  if (!rule_) {
    throw std::invalid_argument("a finite-cofinite game needs a worth rule");
  }
}

Rational FinCofGame::value(const Coalition& s) const {
  if (s.universe().is_finite()) {
    throw UniverseMismatchError(
        "finite-cofinite games evaluate countable-universe coalitions only");
  }
  if (s.is_empty()) return 0;
  if (s.is_grand()) return grand_;
  return rule_(s);
}

FinCofGame co_singleton_game(int threshold, Rational grand) {
  if (threshold < 0) {
    throw std::invalid_argument("the co-singleton threshold cannot be negative");
  }
  return FinCofGame(
      [threshold](const Coalition& s) -> Rational {
        if (s.is_cofinite() &&
            s.descriptor().size() <= static_cast<std::size_t>(threshold)) {
          return 1;
        }
        return 0;
      },
      std::move(grand));
}

FinCofGame additive_fincof_game(std::map<int, Rational> weights) {
  FinCofCharge measure(std::move(weights), Rational(0));
  Rational grand = measure.total();
  return FinCofGame(
      [measure](const Coalition& s) { return measure(s); }, std::move(grand));
}

FinCofGame table_game(std::map<int, Rational> cof_by_size,
                      std::map<int, Rational> fin_by_size,
                      std::map<Coalition, Rational> exceptions,
                      Rational grand) {
  for (const auto& [coalition, worth] : exceptions) {
    if (coalition.universe().is_finite()) {
      throw UniverseMismatchError(
          "table exceptions must be countable-universe coalitions");
    }
  }
  return FinCofGame(
      [cof = std::move(cof_by_size), fin = std::move(fin_by_size),
       exceptions = std::move(exceptions)](const Coalition& s) -> Rational {
        if (auto it = exceptions.find(s); it != exceptions.end()) {
          return it->second;
        }
        const auto& table = s.is_cofinite() ? cof : fin;
        auto it = table.find(static_cast<int>(s.descriptor().size()));
        return it == table.end() ? Rational(0) : it->second;
      },
      std::move(grand));
}

// --- truncation ----------------------------------------------------------------

FiniteGame truncate(const FinCofGame& game, int m, TruncationMode mode,
                    int full_cap) {
  if (m < 1) {
    throw std::invalid_argument("a truncation needs at least one player");
  }
  if (mode == TruncationMode::FullPowerSet && m > full_cap) {
    throw std::invalid_argument(
        "full truncation is capped at " + std::to_string(full_cap) +
        " players (a column per subset); use sparse mode or raise the cap");
  }
  const PlayerUniverse universe = PlayerUniverse::finite(m);

  std::vector<Coalition> coalitions;
  if (mode == TruncationMode::FullPowerSet) {
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
      std::vector<int> members;
      for (int p = 1; p <= m; ++p) {
        if (mask & (1ul << (p - 1))) members.push_back(p);
      }
      coalitions.push_back(Coalition::of(universe, std::move(members)));
    }
  } else {
    coalitions.push_back(Coalition::empty(universe));
    coalitions.push_back(Coalition::grand(universe));
    for (int p = 1; p <= m; ++p) {
      std::vector<int> rest;
      for (int q = 1; q <= m; ++q) {
        if (q != p) rest.push_back(q);
      }
      Coalition singleton = Coalition::of(universe, {p});
      Coalition cosingleton = Coalition::of(universe, std::move(rest));
      for (Coalition c : {singleton, cosingleton}) {
        if (std::find(coalitions.begin(), coalitions.end(), c) ==
            coalitions.end()) {
          coalitions.push_back(std::move(c));
        }
      }
    }
  }

  // A window coalition stands for the cofinite set missing exactly the
  // window players outside it; its worth is read off the infinite game.
  std::map<Coalition, Rational> values;
  for (const Coalition& s : coalitions) {
    if (s.is_empty()) continue;
    std::vector<int> missing;
    for (int p = 1; p <= m; ++p) {
      if (!s.contains(p)) missing.push_back(p);
    }
    values[s] = game.value(Coalition::cofinite(std::move(missing)));
  }
  return FiniteGame(CoalitionSystem(universe, std::move(coalitions)),
                    std::move(values));
}

namespace {

std::optional<Rational> finite_optimum(const BalancednessVerdict& verdict) {
  if (const auto* balanced = std::get_if<BalancedVerdict>(&verdict)) {
    return balanced->optimal_value;
  }
  if (const auto* unbalanced = std::get_if<UnbalancedVerdict>(&verdict)) {
    return unbalanced->value;
  }
  return std::nullopt;
}

}  // namespace

TruncationStudy truncation_study(const FinCofGame& game, int m_from, int m_to,
                                 BalancednessVariant variant,
                                 TruncationMode mode, int full_cap) {
  if (m_from < 1 || m_to < m_from) {
    throw std::invalid_argument("truncation range must satisfy 1 <= from <= to");
  }
  const int count = m_to - m_from + 1;
  std::vector<TruncationReport> reports;
  reports.reserve(static_cast<std::size_t>(count));

  // Each window is independent; fan out in bounded batches and merge in
  // ascending m.
  const auto run_one = [&](int m) {
    TruncationReport report;
    report.m = m;
    report.variant = variant;
    report.verdict = check_balanced(truncate(game, m, mode, full_cap), variant);
    report.optimum = finite_optimum(report.verdict);
    return report;
  };
  const int batch = std::max(1u, std::thread::hardware_concurrency());
  for (int start = m_from; start <= m_to; start += batch) {
    const int stop = std::min(m_to, start + batch - 1);
    std::vector<std::future<TruncationReport>> futures;
    for (int m = start; m <= stop; ++m) {
      futures.push_back(std::async(std::launch::async, run_one, m));
    }
    for (auto& future : futures) reports.push_back(future.get());
  }

  TruncationStudy study;
  study.grand_value = game.grand_value();
  std::optional<Rational> previous;
  for (const TruncationReport& report : reports) {
    if (!report.optimum) continue;
    if (previous && *report.optimum > *previous) {
      study.optima_nonincreasing = false;
    }
    previous = report.optimum;
  }
  if (previous) {
    Rational gap = *previous - study.grand_value;
    if (gap < 0) gap = -gap;
    study.final_gap = std::move(gap);
  }
  study.reports = std::move(reports);
  return study;
}

// --- certificate nets -----------------------------------------------------------

WeightSystem co_singleton_certificate(int i) {
  if (i < 1) {
    throw std::invalid_argument("net stages are indexed from 1");
  }
  WeightSystem ws{PlayerUniverse::countable(), {}};
  for (int n = 1; n <= i; ++n) {
    ws.weights.emplace(Coalition::cofinite({n}), Rational(1));
  }
  const Rational grand_weight = Rational(-(i - 2));
  if (grand_weight != 0) {
    ws.weights.emplace(Coalition::grand(PlayerUniverse::countable()),
                       grand_weight);
  }
  return ws;
}

CertificateNet co_singleton_net() {
  return CertificateNet{[](int i) { return co_singleton_certificate(i); }};
}

Rational weighted_worth(const WeightSystem& weights, const FinCofGame& game) {
  Rational worth = 0;
  for (const auto& [coalition, weight] : weights.weights) {
    worth += weight * game.value(coalition);
  }
  return worth;
}

NetReport verify_certificate_net(const FinCofGame& game,
                                 const CertificateNet& net,
                                 const std::vector<FinCofCharge>& test_charges,
                                 int horizon) {
  if (!net.at) {
    throw std::invalid_argument("the certificate net has no generator");
  }
  if (horizon < 1) {
    throw std::invalid_argument("the net horizon must be at least 1");
  }

  NetReport report;
  report.horizon = horizon;
  report.grand_value = game.grand_value();

  std::vector<SimpleFunction> covers;
  covers.reserve(static_cast<std::size_t>(horizon));
  for (int i = 1; i <= horizon; ++i) {
    const WeightSystem stage = net.at(i);
    if (stage.universe.is_finite()) {
      throw UniverseMismatchError(
          "certificate nets live over the countable universe");
    }
    report.worths.push_back(weighted_worth(stage, game));
    covers.push_back(coalition_cover(stage));
  }

  // The worth sequence is declared stabilized when its tail window is
  // constant; the stabilized value is the net's claim against v(N).
  const int window = std::min(horizon, 5);
  bool stable = true;
  for (int k = 0; k < window; ++k) {
    if (report.worths[static_cast<std::size_t>(horizon - 1 - k)] !=
        report.worths.back()) {
      stable = false;
      break;
    }
  }
  if (stable) report.worth_limit = report.worths.back();

  bool all_admissible_vanish = true;
  int admissible_count = 0;
  for (const FinCofCharge& charge : test_charges) {
    NetChargeTrace trace;
    trace.charge = charge;
    trace.admissible = is_sigma_additive(charge);
    if (!trace.admissible) {
      trace.note = "rejected: tail " + rational_to_string(charge.tail()) +
                   " is nonzero, so the charge is not sigma-additive and its "
                   "deviation keeps the tail offset";
    }
    const Rational total = charge.total();
    for (int i = 1; i <= horizon; ++i) {
      trace.deviations.push_back(
          functional(charge, covers[static_cast<std::size_t>(i - 1)]) - total);
    }
    int from = 0;
    for (int i = horizon; i >= 1 &&
                          trace.deviations[static_cast<std::size_t>(i - 1)] == 0;
         --i) {
      from = i;
    }
    trace.vanished_from = from;
    if (trace.admissible) {
      ++admissible_count;
      const bool vanishes =
          from != 0 && from <= charge.max_support() + 1 &&
          charge.max_support() < horizon;
      if (!vanishes) all_admissible_vanish = false;
    }
    report.traces.push_back(std::move(trace));
  }

  // The witness is never vacuous: at least one sigma-additive charge must
  // actually have been probed and seen to stop deviating.
  report.violation_witnessed = stable && admissible_count > 0 &&
                               all_admissible_vanish && report.worth_limit &&
                               *report.worth_limit > report.grand_value;
  return report;
}

std::vector<FinCofCharge> default_test_charges() {
  std::vector<FinCofCharge> charges;
  for (int p = 1; p <= 10; ++p) charges.push_back(FinCofCharge::dirac(p));
  charges.push_back(FinCofCharge({{1, Rational(1, 2)}, {2, Rational(1, 2)}},
                                 Rational(0)));
  charges.push_back(FinCofCharge({{2, Rational(1, 3)}, {5, Rational(2, 3)}},
                                 Rational(0)));
  return charges;
}

// --- sigma-core probes ------------------------------------------------------------

namespace {

void enumerate_subsets(int window, int size, std::vector<int>& scratch,
                       int next, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(scratch.size()) == size) {
    out.push_back(scratch);
    return;
  }
  for (int p = next; p <= window; ++p) {
    scratch.push_back(p);
    enumerate_subsets(window, size, scratch, p + 1, out);
    scratch.pop_back();
  }
}

}  // namespace

SigmaProbeResult sigma_core_probe(const FinCofGame& game, int window,
                                  int depth) {
  if (window < 1 || depth < 1) {
    throw std::invalid_argument("probe window and depth must be at least 1");
  }

  // Core constraints from every coalition described by at most `depth`
  // window players, on either side of the field.
  std::vector<Coalition> constraints;
  std::vector<Rational> required;
  for (int size = 1; size <= std::min(depth, window); ++size) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> scratch;
    enumerate_subsets(window, size, scratch, 1, subsets);
    for (const std::vector<int>& subset : subsets) {
      Coalition fin = Coalition::of(PlayerUniverse::countable(), subset);
      required.push_back(game.value(fin));
      constraints.push_back(std::move(fin));
      Coalition cof = Coalition::cofinite(subset);
      required.push_back(game.value(cof));
      constraints.push_back(std::move(cof));
    }
  }

  // Polar form, which keeps the tableau at `window` rows: variables are
  // one multiplier per constraint plus the efficiency multiplier; a zero
  // row per window player forces the aggregation to cancel every atom
  // weight.  Feasible charges come back as the equality multipliers;
  // unbounded rays are exactly the infeasibility certificates.
  const Eigen::Index cols = static_cast<Eigen::Index>(constraints.size()) + 1;
  RationalLP lp;
  lp.sense = Sense::Maximize;
  lp.constraints = MatrixXq::Zero(window, cols);
  lp.rhs = VectorXq::Zero(window);
  lp.objective = VectorXq::Zero(cols);
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    std::ostringstream name;
    name << 'y' << c;
    lp.variable_names.push_back(name.str());
    lp.signs.push_back(VarSign::NonNegative);
    lp.objective(static_cast<Eigen::Index>(c)) = required[c];
    for (int p = 1; p <= window; ++p) {
      if (constraints[c].contains(p)) {
        lp.constraints(p - 1, static_cast<Eigen::Index>(c)) = 1;
      }
    }
  }
  lp.variable_names.push_back("t");
  lp.signs.push_back(VarSign::Free);
  lp.objective(cols - 1) = game.grand_value();
  for (int p = 1; p <= window; ++p) lp.constraints(p - 1, cols - 1) = 1;

  const LPOutcome outcome = solve(lp);
  if (!verify(lp, outcome)) {
    throw std::logic_error("sigma probe outcome failed self-verification");
  }

  if (const auto* optimal = std::get_if<OptimalOutcome>(&outcome)) {
    if (optimal->value != 0) {
      throw std::logic_error("the probe cone must optimize to zero");
    }
    // The equality multipliers are the atom weights of a feasible charge.
    std::map<int, Rational> atoms;
    for (int p = 1; p <= window; ++p) {
      if (optimal->dual(p - 1) != 0) atoms[p] = optimal->dual(p - 1);
    }
    FinCofCharge charge(std::move(atoms), Rational(0));
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      if (charge(constraints[c]) < required[c]) {
        throw std::logic_error("probe charge failed a core constraint");
      }
    }
    if (charge.total() != game.grand_value()) {
      throw std::logic_error("probe charge failed efficiency");
    }
    return SigmaProbeFeasible{std::move(charge)};
  }

  const auto& unbounded = std::get<UnboundedOutcome>(outcome);
  SigmaProbeInfeasible result;
  result.window = window;
  result.depth = depth;
  result.efficiency_multiplier = unbounded.ray(cols - 1);
  result.gap = 0;
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const Rational& y = unbounded.ray(static_cast<Eigen::Index>(c));
    if (y < 0) throw std::logic_error("probe multipliers must be nonnegative");
    if (y != 0) result.multipliers.emplace_back(constraints[c], y);
    result.gap += y * required[c];
  }
  result.gap += result.efficiency_multiplier * game.grand_value();
  // Re-check the aggregation cancels every atom weight and leaves a gap.
  for (int p = 1; p <= window; ++p) {
    Rational sum = result.efficiency_multiplier;
    for (const auto& [coalition, multiplier] : result.multipliers) {
      if (coalition.contains(p)) sum += multiplier;
    }
    if (sum != 0) {
      throw std::logic_error("probe aggregation does not cancel atom weights");
    }
  }
  if (result.gap <= 0) {
    throw std::logic_error("probe aggregation has no positive gap");
  }
  return result;
}

}  // namespace kore
