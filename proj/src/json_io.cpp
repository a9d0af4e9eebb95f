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

#include "kore/json_io.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kore::jsonio {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

const json& require_field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string(where) + " is missing its \"" + key + "\" field");
  }
  return j.at(key);
}

/// Strict nonnegative-integer parse of an object key ("3" but not "  3",
/// "3.0" or "03 players").
int parse_index_key(const std::string& key, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(key.data(), key.data() + key.size(), value);
  if (ec != std::errc() || ptr != key.data() + key.size() || key.empty()) {
    fail(std::string(what) + " keys must be integers, got \"" + key + "\"");
  }
  return value;
}

int parse_player_key(const std::string& key, const char* what) {
  const int player = parse_index_key(key, what);
  if (player < 1) {
    fail(std::string(what) + " keys are 1-based players, got \"" + key + "\"");
  }
  return player;
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) {
    fail(std::string(what) + " must be an array of players");
  }
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_number_integer()) {
      fail(std::string(what) + " must contain integers only");
    }
    out.push_back(entry.get<int>());
  }
  return out;
}

std::map<int, Rational> rational_map(const json& j, const char* what,
                                     bool player_keys) {
  if (!j.is_object()) {
    fail(std::string(what) + " must be an object of \"p/q\" values");
  }
  std::map<int, Rational> out;
  for (const auto& [key, value] : j.items()) {
    const int index = player_keys ? parse_player_key(key, what)
                                  : parse_index_key(key, what);
    out[index] = rational_from_json(value);
  }
  return out;
}

json rational_map_to_json(const std::map<int, Rational>& values) {
  json out = json::object();
  for (const auto& [index, value] : values) {
    out[std::to_string(index)] = rational_to_json(value);
  }
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (j.is_number_float()) {
    fail("rationals must be \"p/q\" strings or integers, not floating point");
  }
  fail("expected a rational: a \"p/q\" string or an integer");
}

json rational_to_json(const Rational& value) {
  return json(rational_to_string(value));
}

PlayerUniverse universe_from_json(const json& j) {
  const json& players = require_field(j, "players", "a universe");
  if (players.is_string()) {
    if (players.get<std::string>() == "countable") {
      return PlayerUniverse::countable();
    }
    fail("\"players\" must be a positive integer or \"countable\"");
  }
  if (!players.is_number_integer() || players.get<int>() < 1) {
    fail("\"players\" must be a positive integer or \"countable\"");
  }
  return PlayerUniverse::finite(players.get<int>());
}

json universe_to_json(const PlayerUniverse& universe) {
  json out = json::object();
  if (universe.is_finite()) {
    out["players"] = universe.size();
  } else {
    out["players"] = "countable";
  }
  return out;
}

Coalition coalition_from_json(const json& j, const PlayerUniverse& universe) {
  if (!j.is_object()) {
    fail("a coalition is {\"members\": [...]} or {\"cofinite\": [...]}");
  }
  if (j.contains("cofinite")) {
    if (universe.is_finite()) {
      fail("\"cofinite\" coalitions live on the countable universe only");
    }
    return Coalition::cofinite(int_list(j.at("cofinite"), "\"cofinite\""));
  }
  if (j.contains("members")) {
    return Coalition::of(universe, int_list(j.at("members"), "\"members\""));
  }
  fail("a coalition is {\"members\": [...]} or {\"cofinite\": [...]}");
}

json coalition_to_json(const Coalition& coalition) {
  json out = json::object();
  if (!coalition.universe().is_finite() && coalition.is_cofinite()) {
    out["cofinite"] = coalition.descriptor();
  } else {
    out["members"] = coalition.members();
  }
  return out;
}

CoalitionSystem system_from_json(const json& j) {
  const PlayerUniverse universe = universe_from_json(j);
  if (!universe.is_finite()) {
    fail("a coalition system file needs a finite \"players\" count");
  }
  const json& entries = require_field(j, "coalitions", "a coalition system");
  if (!entries.is_array()) {
    fail("\"coalitions\" must be an array");
  }
  std::vector<Coalition> coalitions;
  coalitions.reserve(entries.size());
  for (const json& entry : entries) {
    coalitions.push_back(coalition_from_json(entry, universe));
  }
  return CoalitionSystem(universe, std::move(coalitions));
}

FiniteGame game_from_json(const json& j) {
  const PlayerUniverse universe = universe_from_json(j);
  if (!universe.is_finite()) {
    fail("a game file needs a finite \"players\" count");
  }
  const json& entries = require_field(j, "coalitions", "a game");
  if (!entries.is_array()) {
    fail("\"coalitions\" must be an array");
  }
  std::vector<Coalition> coalitions;
  std::map<Coalition, Rational> values;
  coalitions.reserve(entries.size());
  for (const json& entry : entries) {
    Coalition s = coalition_from_json(entry, universe);
    if (entry.contains("value")) {
      values.emplace(s, rational_from_json(entry.at("value")));
    } else if (!s.is_empty()) {
      fail("every nonempty coalition of a game needs a \"value\"");
    }
    coalitions.push_back(std::move(s));
  }
  return FiniteGame(CoalitionSystem(universe, std::move(coalitions)),
                    std::move(values));
}

json game_to_json(const FiniteGame& game) {
  json out = json::object();
  out["players"] = game.universe().size();
  json entries = json::array();
  for (const Coalition& s : game.system().coalitions()) {
    if (s.is_empty()) continue;
    json entry = coalition_to_json(s);
    entry["value"] = rational_to_json(game.value(s));
    entries.push_back(std::move(entry));
  }
  out["coalitions"] = std::move(entries);
  return out;
}

FinCofCharge fincof_charge_from_json(const json& j) {
  if (!j.is_object()) {
    fail("a charge is {\"atoms\": {...}, \"tail\": \"p/q\"}");
  }
  std::map<int, Rational> atoms;
  if (j.contains("atoms")) {
    atoms = rational_map(j.at("atoms"), "charge atom", /*player_keys=*/true);
  }
  Rational tail = 0;
  if (j.contains("tail")) {
    tail = rational_from_json(j.at("tail"));
  }
  return FinCofCharge(std::move(atoms), std::move(tail));
}

json fincof_charge_to_json(const FinCofCharge& charge) {
  json out = json::object();
  out["atoms"] = rational_map_to_json(charge.atom_weights());
  out["tail"] = rational_to_json(charge.tail());
  return out;
}

FiniteCharge finite_charge_from_json(const json& j, const FieldOfSets& field) {
  if (!j.is_object()) {
    fail("a charge is {\"atoms\": {\"player\": \"p/q\", ...}}");
  }
  const auto& atoms = field.atoms();
  VectorXq values = VectorXq::Zero(static_cast<Eigen::Index>(atoms.size()));
  std::vector<bool> assigned(atoms.size(), false);
  if (j.contains("atoms")) {
    for (const auto& [key, raw] :
         rational_map(j.at("atoms"), "charge atom", /*player_keys=*/true)) {
      std::size_t index = atoms.size();
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (atoms[a].contains(key)) {
          index = a;
          break;
        }
      }
      if (index == atoms.size()) {
        fail("player " + std::to_string(key) +
             " is outside the field's universe");
      }
      if (assigned[index]) {
        fail("two atom values name the same atom of the field (player " +
             std::to_string(key) + ")");
      }
      assigned[index] = true;
      values(static_cast<Eigen::Index>(index)) = raw;
    }
  }
  return FiniteCharge(field, std::move(values));
}

json finite_charge_to_json(const FiniteCharge& charge) {
  json out = json::object();
  json atom_values = json::object();
  json blocks = json::array();
  const auto& atoms = charge.field().atoms();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const std::vector<int> members = atoms[a].members();
    atom_values[std::to_string(members.front())] =
        rational_to_json(charge.atom_values()(static_cast<Eigen::Index>(a)));
    blocks.push_back(members);
  }
  out["atoms"] = std::move(atom_values);
  out["blocks"] = std::move(blocks);
  return out;
}

WeightSystem weight_system_from_json(const json& j,
                                     const PlayerUniverse& universe) {
  const json& entries = require_field(j, "weights", "a weight system");
  if (!entries.is_array()) {
    fail("\"weights\" must be an array of {\"coalition\", \"weight\"} pairs");
  }
  WeightSystem out{universe, {}};
  for (const json& entry : entries) {
    Coalition s = coalition_from_json(
        require_field(entry, "coalition", "a weight entry"), universe);
    Rational w =
        rational_from_json(require_field(entry, "weight", "a weight entry"));
    if (!out.weights.emplace(std::move(s), std::move(w)).second) {
      fail("a coalition appears twice in the weight system");
    }
  }
  return out;
}

json weight_system_to_json(const WeightSystem& weights) {
  json entries = json::array();
  for (const auto& [coalition, weight] : weights.weights) {
    json entry = json::object();
    entry["coalition"] = coalition_to_json(coalition);
    entry["weight"] = rational_to_json(weight);
    entries.push_back(std::move(entry));
  }
  json out = json::object();
  out["weights"] = std::move(entries);
  return out;
}

FinCofGame fincof_game_from_json(const json& j) {
  const json& family = require_field(j, "family", "a game family");
  if (!family.is_string()) {
    fail("\"family\" must be a string");
  }
  const std::string name = family.get<std::string>();
  if (name == "co-singleton") {
    int threshold = 1;
    if (j.contains("K")) {
      if (!j.at("K").is_number_integer() || j.at("K").get<int>() < 0) {
        fail("\"K\" must be a nonnegative integer");
      }
      threshold = j.at("K").get<int>();
    }
    Rational grand(1);
    if (j.contains("grand")) {
      grand = rational_from_json(j.at("grand"));
    }
    return co_singleton_game(threshold, std::move(grand));
  }
  if (name == "additive") {
    return additive_fincof_game(rational_map(
        require_field(j, "weights", "an additive game"), "player weight",
        /*player_keys=*/true));
  }
  if (name == "table") {
    std::map<int, Rational> cof_by_size;
    std::map<int, Rational> fin_by_size;
    if (j.contains("cofinite_by_size")) {
      cof_by_size = rational_map(j.at("cofinite_by_size"), "descriptor size",
                                 /*player_keys=*/false);
    }
    if (j.contains("finite_by_size")) {
      fin_by_size = rational_map(j.at("finite_by_size"), "descriptor size",
                                 /*player_keys=*/false);
    }
    std::map<Coalition, Rational> exceptions;
    if (j.contains("exceptions")) {
      const json& entries = j.at("exceptions");
      if (!entries.is_array()) {
        fail("\"exceptions\" must be an array");
      }
      const PlayerUniverse universe = PlayerUniverse::countable();
      for (const json& entry : entries) {
        Coalition s = coalition_from_json(
            require_field(entry, "coalition", "an exception entry"), universe);
        Rational value = rational_from_json(
            require_field(entry, "value", "an exception entry"));
        if (!exceptions.emplace(std::move(s), std::move(value)).second) {
          fail("a coalition appears twice in \"exceptions\"");
        }
      }
    }
    return table_game(std::move(cof_by_size), std::move(fin_by_size),
                      std::move(exceptions),
                      rational_from_json(require_field(j, "grand",
                                                       "a table game")));
  }
  fail("unknown game family \"" + name +
       "\"; known families: additive, co-singleton, table");
}

std::string variant_name(BalancednessVariant variant) {
  return variant == BalancednessVariant::SchmeidlerNonNeg ? "schmeidler"
                                                          : "grand-free";
}

BalancednessVariant variant_from_name(const std::string& name) {
  if (name == "schmeidler") return BalancednessVariant::SchmeidlerNonNeg;
  if (name == "grand-free") return BalancednessVariant::GrandFree;
  fail("unknown variant \"" + name + "\"; use schmeidler or grand-free");
}

json verdict_body_to_json(const BalancednessVerdict& verdict) {
  json out = json::object();
  if (const auto* balanced = std::get_if<BalancedVerdict>(&verdict)) {
    out["verdict"] = "balanced";
    out["value"] = rational_to_json(balanced->optimal_value);
  } else if (const auto* unbalanced = std::get_if<UnbalancedVerdict>(&verdict)) {
    out["verdict"] = "unbalanced";
    out["value"] = rational_to_json(unbalanced->value);
    out["certificate"] = weight_system_to_json(unbalanced->certificate);
  } else {
    const auto& unbounded = std::get<UnboundedViolationVerdict>(verdict);
    out["verdict"] = "unbounded-violation";
    out["base"] = weight_system_to_json(unbounded.base);
    out["ray"] = weight_system_to_json(unbounded.ray);
  }
  return out;
}

json balancedness_to_json(const BalancednessVerdict& verdict,
                          BalancednessVariant variant,
                          const Rational& grand_value) {
  json out = verdict_body_to_json(verdict);
  out["variant"] = variant_name(variant);
  out["grand_value"] = rational_to_json(grand_value);
  return out;
}

json hull_to_json(const FieldOfSets& field) {
  json out = json::object();
  out["players"] = field.universe().size();
  json atoms = json::array();
  for (const Coalition& atom : field.atoms()) {
    atoms.push_back(atom.members());
  }
  out["atoms"] = std::move(atoms);
  out["atom_count"] = static_cast<int>(field.atom_count());
  boost::multiprecision::mpz_int size = 1;
  size <<= static_cast<unsigned>(field.atom_count());
  out["field_size"] = size.str();
  return out;
}

json core_result_to_json(const CoreResult& result, const FiniteGame& game) {
  json out = json::object();
  out["grand_value"] = rational_to_json(game.grand_value());
  if (const auto* charge = std::get_if<FiniteCharge>(&result)) {
    out["core"] = "nonempty";
    out["charge"] = finite_charge_to_json(*charge);
  } else {
    const auto& certificate = std::get<EmptinessCertificate>(result);
    out["core"] = "empty";
    out["certificate"] = weight_system_to_json(certificate.weights);
    out["value"] = rational_to_json(certificate.value);
  }
  return out;
}

json membership_to_json(const MembershipReport& report) {
  json out = json::object();
  out["member"] = report.member;
  json violations = json::array();
  for (const CoreViolation& v : report.violations) {
    json entry = json::object();
    entry["coalition"] = coalition_to_json(v.coalition);
    entry["required"] = rational_to_json(v.required);
    entry["actual"] = rational_to_json(v.actual);
    entry["deficit"] = rational_to_json(v.deficit);
    entry["efficiency"] = v.efficiency;
    violations.push_back(std::move(entry));
  }
  out["violations"] = std::move(violations);
  return out;
}

json study_to_json(const TruncationStudy& study, TruncationMode mode) {
  json out = json::object();
  out["mode"] = mode == TruncationMode::FullPowerSet ? "full" : "sparse";
  out["grand_value"] = rational_to_json(study.grand_value);
  json reports = json::array();
  for (const TruncationReport& report : study.reports) {
    json entry = verdict_body_to_json(report.verdict);
    entry["m"] = report.m;
    entry["variant"] = variant_name(report.variant);
    reports.push_back(std::move(entry));
  }
  out["reports"] = std::move(reports);
  out["optima_nonincreasing"] = study.optima_nonincreasing;
  out["final_gap"] = study.final_gap ? rational_to_json(*study.final_gap)
                                     : json(nullptr);
  return out;
}

json net_report_to_json(const NetReport& report) {
  json out = json::object();
  out["horizon"] = report.horizon;
  out["grand_value"] = rational_to_json(report.grand_value);
  json worths = json::array();
  for (const Rational& w : report.worths) {
    worths.push_back(rational_to_json(w));
  }
  out["worths"] = std::move(worths);
  out["worth_limit"] = report.worth_limit ? rational_to_json(*report.worth_limit)
                                          : json(nullptr);
  json charges = json::array();
  for (const NetChargeTrace& trace : report.traces) {
    json entry = json::object();
    entry["charge"] = fincof_charge_to_json(trace.charge);
    entry["admissible"] = trace.admissible;
    if (!trace.note.empty()) {
      entry["note"] = trace.note;
    }
    json deviations = json::array();
    for (const Rational& d : trace.deviations) {
      deviations.push_back(rational_to_json(d));
    }
    entry["deviations"] = std::move(deviations);
    entry["vanished_from"] = trace.vanished_from;
    charges.push_back(std::move(entry));
  }
  out["charges"] = std::move(charges);
  out["violation_witnessed"] = report.violation_witnessed;
  return out;
}

json probe_to_json(const SigmaProbeResult& result, int window, int depth) {
  json out = json::object();
  out["window"] = window;
  out["depth"] = depth;
  if (const auto* feasible = std::get_if<SigmaProbeFeasible>(&result)) {
    out["result"] = "feasible";
    out["charge"] = fincof_charge_to_json(feasible->charge);
  } else {
    const auto& infeasible = std::get<SigmaProbeInfeasible>(result);
    out["result"] = "infeasible-within";
    json multipliers = json::array();
    for (const auto& [coalition, multiplier] : infeasible.multipliers) {
      json entry = json::object();
      entry["coalition"] = coalition_to_json(coalition);
      entry["multiplier"] = rational_to_json(multiplier);
      multipliers.push_back(std::move(entry));
    }
    out["multipliers"] = std::move(multipliers);
    out["efficiency_multiplier"] =
        rational_to_json(infeasible.efficiency_multiplier);
    out["gap"] = rational_to_json(infeasible.gap);
  }
  return out;
}

}  // namespace kore::jsonio
