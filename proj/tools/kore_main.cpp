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

// kore -- exact core and balancedness analysis for cooperative games.
//
// Every number is an exact rational; identical invocations print
// byte-identical output.  Verdicts ("core is empty", "unbalanced") are
// analysis results and exit 0; only malformed input or usage exits 1.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kore/json_io.hpp"

namespace {

using kore::jsonio::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  json parsed;
  try {
    parsed = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return parsed;
}

std::string coalition_label(const kore::Coalition& s) {
  if (s.is_empty()) return "{}";
  if (!s.universe().is_finite() && s.is_cofinite()) {
    if (s.is_grand()) return "N";
    std::string out = "N\\{";
    const auto& excluded = s.descriptor();
    for (std::size_t i = 0; i < excluded.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(excluded[i]);
    }
    return out + "}";
  }
  if (s.is_grand()) return "N";
  std::string out = "{";
  const std::vector<int> members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  auto print_row = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      cell.resize(widths[c], ' ');
      line += c ? "  " + cell : cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << "  " << line << "\n";
  };
  print_row(header);
  std::vector<std::string> rule;
  rule.reserve(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    rule.emplace_back(widths[c], '-');
  }
  print_row(rule);
  for (const auto& row : rows) print_row(row);
}

std::string q(const kore::Rational& value) {
  return kore::rational_to_string(value);
}

void print_weight_table(const kore::WeightSystem& weights) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [coalition, weight] : weights.weights) {
    rows.push_back({coalition_label(coalition), q(weight)});
  }
  print_table({"coalition", "weight"}, rows);
}

// ---------------------------------------------------------------------------
// Certificate arithmetic, applied to payloads loaded back through --verify.
// These checks are independent of the solver: they re-derive the claimed
// identities (covering, worth, sign constraints) by direct evaluation.

void verify_fail(const std::string& what) {
  throw std::runtime_error("verification failed: " + what);
}

kore::SimpleFunction grand_indicator(const kore::PlayerUniverse& universe) {
  kore::SimpleFunction f(universe);
  f.add_term(kore::Coalition::grand(universe), 1);
  return f;
}

void check_cover(const kore::WeightSystem& weights,
                 const kore::SimpleFunction& target, const char* label) {
  if (!kore::pointwise_equal(kore::coalition_cover(weights), target)) {
    verify_fail(std::string(label) + " does not produce the claimed cover");
  }
}

void check_within_system(const kore::WeightSystem& weights,
                         const kore::FiniteGame& game) {
  for (const auto& [coalition, weight] : weights.weights) {
    (void)weight;
    if (!game.system().contains(coalition)) {
      verify_fail("certificate uses coalition " + coalition_label(coalition) +
                  ", which is outside the admissible system");
    }
  }
}

void check_signs(const kore::WeightSystem& weights,
                 kore::BalancednessVariant variant) {
  const kore::Coalition grand = kore::Coalition::grand(weights.universe);
  for (const auto& [coalition, weight] : weights.weights) {
    const bool grand_exempt =
        variant == kore::BalancednessVariant::GrandFree && coalition == grand;
    if (!grand_exempt && weight < 0) {
      verify_fail("negative weight on " + coalition_label(coalition));
    }
  }
}

void verify_balancedness_payload(const json& payload,
                                 const kore::FiniteGame& game,
                                 kore::BalancednessVariant variant) {
  const std::string verdict = payload.at("verdict").get<std::string>();
  const kore::PlayerUniverse& universe = game.universe();
  if (kore::jsonio::rational_from_json(payload.at("grand_value")) !=
      game.grand_value()) {
    verify_fail("grand_value does not match the game");
  }
  if (verdict == "balanced") {
    if (kore::jsonio::rational_from_json(payload.at("value")) >
        game.grand_value()) {
      verify_fail("a balanced verdict carries value above v(N)");
    }
  } else if (verdict == "unbalanced") {
    const kore::WeightSystem certificate = kore::jsonio::weight_system_from_json(
        payload.at("certificate"), universe);
    check_within_system(certificate, game);
    check_signs(certificate, variant);
    check_cover(certificate, grand_indicator(universe), "certificate");
    const kore::Rational worth = kore::weighted_worth(certificate, game);
    if (worth != kore::jsonio::rational_from_json(payload.at("value"))) {
      verify_fail("certificate worth does not match the claimed value");
    }
    if (!(worth > game.grand_value())) {
      verify_fail("certificate worth does not exceed v(N)");
    }
  } else if (verdict == "unbounded-violation") {
    const kore::WeightSystem base =
        kore::jsonio::weight_system_from_json(payload.at("base"), universe);
    const kore::WeightSystem ray =
        kore::jsonio::weight_system_from_json(payload.at("ray"), universe);
    check_within_system(base, game);
    check_within_system(ray, game);
    check_cover(base, grand_indicator(universe), "base");
    check_cover(ray, kore::SimpleFunction(universe), "ray");
    if (!(kore::weighted_worth(ray, game) > 0)) {
      verify_fail("ray worth is not positive");
    }
  } else {
    verify_fail("unknown verdict \"" + verdict + "\"");
  }
}

void verify_core_payload(const json& payload, const kore::FiniteGame& game) {
  const std::string core = payload.at("core").get<std::string>();
  if (kore::jsonio::rational_from_json(payload.at("grand_value")) !=
      game.grand_value()) {
    verify_fail("grand_value does not match the game");
  }
  if (core == "nonempty") {
    const kore::FiniteCharge charge = kore::jsonio::finite_charge_from_json(
        payload.at("charge"), kore::field_hull(game.system()));
    const kore::MembershipReport report =
        kore::check_core_membership(game, charge);
    if (!report.member) {
      verify_fail("the claimed core element violates a constraint");
    }
  } else if (core == "empty") {
    const kore::WeightSystem certificate = kore::jsonio::weight_system_from_json(
        payload.at("certificate"), game.universe());
    check_within_system(certificate, game);
    check_cover(certificate, grand_indicator(game.universe()), "certificate");
    const kore::Rational worth = kore::weighted_worth(certificate, game);
    if (worth != kore::jsonio::rational_from_json(payload.at("value"))) {
      verify_fail("certificate worth does not match the claimed value");
    }
    if (!(worth > game.grand_value())) {
      verify_fail("certificate worth does not exceed v(N)");
    }
  } else {
    verify_fail("unknown core field \"" + core + "\"");
  }
}

// ---------------------------------------------------------------------------

struct Output {
  bool as_json = false;
  std::string verify_path;  // when set: check instead of print

  /// Print the payload (or verify it) and return the process exit code.
  int finish(const json& payload, const std::function<void()>& human,
             const std::function<void(const json&)>& arithmetic = {}) const {
    if (!verify_path.empty()) {
      const json loaded = read_json_file(verify_path);
      if (arithmetic) arithmetic(loaded);
      if (loaded != payload) {
        verify_fail("payload differs from an exact recomputation");
      }
      if (as_json) {
        std::cout << json{{"verified", true}}.dump() << "\n";
      } else {
        std::cout << "payload verified: certificates re-validate exactly\n";
      }
      return 0;
    }
    if (as_json) {
      std::cout << payload.dump() << "\n";
    } else {
      human();
    }
    return 0;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_flag("--json", out.as_json, "emit a machine-readable JSON payload");
  cmd->add_option("--verify", out.verify_path,
                  "re-validate a previously emitted payload file instead of "
                  "printing");
}

/// Shared game-source options for the countable-player subcommands: either
/// a JSON family file or inline --family/--K/--grand flags.
struct FamilySource {
  std::string path;
  std::string family;
  int threshold = 1;
  std::string grand = "1";

  kore::FinCofGame build(json* echo) const {
    if (!path.empty() && !family.empty()) {
      throw CLI::ValidationError(
          "game source", "give a game file or --family, not both");
    }
    json descriptor;
    if (!path.empty()) {
      descriptor = read_json_file(path);
    } else if (!family.empty()) {
      descriptor = json::object();
      descriptor["family"] = family;
      if (family == "co-singleton") {
        descriptor["K"] = threshold;
        descriptor["grand"] = grand;
      }
    } else {
      throw CLI::ValidationError("game source",
                                 "give a game file or --family");
    }
    if (echo) *echo = descriptor;
    return kore::jsonio::fincof_game_from_json(descriptor);
  }
};

void add_family_options(CLI::App* cmd, FamilySource& source) {
  cmd->add_option("input", source.path,
                  "JSON game-family file, e.g. "
                  "{\"family\":\"co-singleton\",\"K\":1,\"grand\":\"1\"}");
  cmd->add_option("--family", source.family,
                  "builtin family name (co-singleton)");
  cmd->add_option("--K", source.threshold,
                  "co-singleton threshold: worth 1 on cofinite coalitions "
                  "missing at most K players");
  cmd->add_option("--grand", source.grand, "grand-coalition value (rational)");
}

int full_cap_from_env() {
  const char* raw = std::getenv("KORE_MAX_FULL_M");
  if (raw == nullptr || *raw == '\0') return 10;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(raw, &used);
    if (used != std::string(raw).size() || cap < 1) {
      throw std::invalid_argument("");
    }
    return cap;
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "KORE_MAX_FULL_M must be a positive integer, got \"" +
        std::string(raw) + "\"");
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int single = std::stoi(text);
      return {single, single};
    }
    const int from = std::stoi(text.substr(0, dots));
    const int to = std::stoi(text.substr(dots + 2));
    if (from < 1 || to < from) throw std::invalid_argument("");
    return {from, to};
  } catch (const std::exception&) {
    throw std::invalid_argument("--m expects a range like 2..8, got \"" +
                                text + "\"");
  }
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the process exit code.

int run_hull(const std::string& input, const Output& out) {
  const json raw = read_json_file(input);
  const kore::CoalitionSystem system = kore::jsonio::system_from_json(raw);
  const kore::FieldOfSets field = kore::field_hull(system);
  const json payload = kore::jsonio::hull_to_json(field);
  return out.finish(
      payload,
      [&] {
        std::cout << "field hull of " << system.coalitions().size()
                  << " admissible coalitions over " << field.universe().size()
                  << " players\n";
        std::vector<std::vector<std::string>> rows;
        for (const kore::Coalition& atom : field.atoms()) {
          rows.push_back({coalition_label(atom)});
        }
        print_table({"atom"}, rows);
        std::cout << "  field size: 2^" << field.atom_count() << "\n";
      },
      [&](const json& loaded) {
        const kore::FieldOfSets recomputed = kore::field_hull(system);
        for (const kore::Coalition& s : system.coalitions()) {
          if (!recomputed.contains(s)) {
            verify_fail("input coalition " + coalition_label(s) +
                        " is not a union of hull atoms");
          }
        }
        (void)loaded;
      });
}

void print_verdict_human(const kore::BalancednessVerdict& verdict,
                         const kore::Rational& grand_value) {
  if (const auto* balanced = std::get_if<kore::BalancedVerdict>(&verdict)) {
    std::cout << "verdict: balanced (optimal cover worth "
              << q(balanced->optimal_value) << " <= v(N) = " << q(grand_value)
              << ")\n";
  } else if (const auto* unbalanced =
                 std::get_if<kore::UnbalancedVerdict>(&verdict)) {
    std::cout << "verdict: unbalanced (cover worth " << q(unbalanced->value)
              << " > v(N) = " << q(grand_value) << ")\n";
    print_weight_table(unbalanced->certificate);
  } else {
    const auto& unbounded = std::get<kore::UnboundedViolationVerdict>(verdict);
    std::cout << "verdict: unbounded violation (base + t*ray covers N with "
                 "worth growing without bound)\n";
    std::cout << "base:\n";
    print_weight_table(unbounded.base);
    std::cout << "ray:\n";
    print_weight_table(unbounded.ray);
  }
}

int run_balanced(const std::string& input, const std::string& variant_name,
                 const Output& out) {
  const kore::FiniteGame game =
      kore::jsonio::game_from_json(read_json_file(input));
  const kore::BalancednessVariant variant =
      kore::jsonio::variant_from_name(variant_name);
  const kore::BalancednessVerdict verdict = kore::check_balanced(game, variant);
  const json payload =
      kore::jsonio::balancedness_to_json(verdict, variant, game.grand_value());
  return out.finish(
      payload, [&] { print_verdict_human(verdict, game.grand_value()); },
      [&](const json& loaded) {
        verify_balancedness_payload(loaded, game, variant);
      });
}

int run_core(const std::string& input, const Output& out) {
  const kore::FiniteGame game =
      kore::jsonio::game_from_json(read_json_file(input));
  const kore::CoreResult result = kore::find_core_element(game);
  const json payload = kore::jsonio::core_result_to_json(result, game);
  return out.finish(
      payload,
      [&] {
        if (const auto* charge = std::get_if<kore::FiniteCharge>(&result)) {
          std::cout << "core: nonempty; one element (additive on the hull "
                       "atoms):\n";
          std::vector<std::vector<std::string>> rows;
          const auto& atoms = charge->field().atoms();
          for (std::size_t a = 0; a < atoms.size(); ++a) {
            rows.push_back(
                {coalition_label(atoms[a]),
                 q(charge->atom_values()(static_cast<Eigen::Index>(a)))});
          }
          print_table({"atom", "charge"}, rows);
        } else {
          const auto& certificate = std::get<kore::EmptinessCertificate>(result);
          std::cout << "core: empty; balancedness violation of worth "
                    << q(certificate.value) << " > v(N) = "
                    << q(game.grand_value()) << ":\n";
          print_weight_table(certificate.weights);
        }
      },
      [&](const json& loaded) { verify_core_payload(loaded, game); });
}

int run_member(const std::string& input, const std::string& charge_path,
               const Output& out) {
  const kore::FiniteGame game =
      kore::jsonio::game_from_json(read_json_file(input));
  const kore::FieldOfSets hull = kore::field_hull(game.system());
  const kore::FiniteCharge charge =
      kore::jsonio::finite_charge_from_json(read_json_file(charge_path), hull);
  const kore::MembershipReport report =
      kore::check_core_membership(game, charge);
  const json payload = kore::jsonio::membership_to_json(report);
  return out.finish(
      payload,
      [&] {
        std::cout << (report.member ? "member: yes\n" : "member: no\n");
        if (!report.violations.empty()) {
          std::vector<std::vector<std::string>> rows;
          for (const kore::CoreViolation& v : report.violations) {
            rows.push_back({v.efficiency ? "efficiency" : "domination",
                            coalition_label(v.coalition), q(v.required),
                            q(v.actual), q(v.deficit)});
          }
          print_table({"constraint", "coalition", "required", "actual",
                       "deficit"},
                      rows);
        }
      },
      [&](const json& loaded) {
        const auto fresh = kore::jsonio::membership_to_json(
            kore::check_core_membership(game, charge));
        if (loaded != fresh) {
          verify_fail("membership payload does not re-validate");
        }
      });
}

int run_truncate_study(const FamilySource& source, const std::string& range,
                       const std::string& variant_name,
                       const std::string& mode_name, const Output& out) {
  const kore::FinCofGame game = source.build(nullptr);
  const auto [m_from, m_to] = parse_range(range);
  const kore::BalancednessVariant variant =
      kore::jsonio::variant_from_name(variant_name);
  kore::TruncationMode mode;
  if (mode_name == "full") {
    mode = kore::TruncationMode::FullPowerSet;
  } else if (mode_name == "sparse") {
    mode = kore::TruncationMode::Sparse;
  } else {
    throw std::invalid_argument("unknown mode \"" + mode_name +
                                "\"; use full or sparse");
  }
  const int full_cap = full_cap_from_env();
  const kore::TruncationStudy study =
      kore::truncation_study(game, m_from, m_to, variant, mode, full_cap);
  const json payload = kore::jsonio::study_to_json(study, mode);
  return out.finish(payload, [&] {
    std::cout << "truncation ladder, m = " << m_from << ".." << m_to
              << ", v(N) = " << q(study.grand_value) << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const kore::TruncationReport& report : study.reports) {
      std::string verdict;
      std::string value = "-";
      if (std::holds_alternative<kore::BalancedVerdict>(report.verdict)) {
        verdict = "balanced";
      } else if (std::holds_alternative<kore::UnbalancedVerdict>(
                     report.verdict)) {
        verdict = "unbalanced";
      } else {
        verdict = "unbounded-violation";
      }
      if (report.optimum) value = q(*report.optimum);
      rows.push_back({std::to_string(report.m), verdict, value});
    }
    print_table({"m", "verdict", "optimum"}, rows);
    if (study.final_gap) {
      std::cout << "  optima nonincreasing: "
                << (study.optima_nonincreasing ? "yes" : "no")
                << "; final gap to v(N): " << q(*study.final_gap) << "\n";
    }
  });
}

int run_net_verify(const FamilySource& source, int horizon,
                   const std::string& charges_path, const Output& out) {
  const kore::FinCofGame game = source.build(nullptr);
  std::vector<kore::FinCofCharge> charges;
  if (charges_path.empty()) {
    charges = kore::default_test_charges();
  } else {
    const json raw = read_json_file(charges_path);
    if (!raw.is_object() || !raw.contains("charges") ||
        !raw.at("charges").is_array()) {
      throw std::invalid_argument(
          "a charges file is {\"charges\": [{\"atoms\": ...}, ...]}");
    }
    for (const json& entry : raw.at("charges")) {
      charges.push_back(kore::jsonio::fincof_charge_from_json(entry));
    }
  }
  const kore::NetReport report = kore::verify_certificate_net(
      game, kore::co_singleton_net(), charges, horizon);
  const json payload = kore::jsonio::net_report_to_json(report);
  return out.finish(payload, [&] {
    std::cout << "certificate net through stage " << report.horizon
              << ", v(N) = " << q(report.grand_value) << "\n";
    if (report.worth_limit) {
      std::cout << "cover worths stabilize at " << q(*report.worth_limit)
                << "\n";
    }
    std::vector<std::vector<std::string>> rows;
    for (const kore::NetChargeTrace& trace : report.traces) {
      std::string label = "{";
      bool first = true;
      for (const auto& [player, weight] : trace.charge.atom_weights()) {
        if (!first) label += ", ";
        first = false;
        label += std::to_string(player) + ":" + q(weight);
      }
      label += "}";
      if (trace.charge.tail() != 0) {
        label += " tail " + q(trace.charge.tail());
      }
      std::string last = trace.deviations.empty()
                             ? std::string("-")
                             : q(trace.deviations.back());
      rows.push_back({label, trace.admissible ? "yes" : "no",
                      trace.vanished_from > 0
                          ? std::to_string(trace.vanished_from)
                          : std::string("-"),
                      last});
    }
    print_table({"charge", "admissible", "deviations vanish from",
                 "last deviation"},
                rows);
    std::cout << (report.violation_witnessed
                      ? "violation witnessed: the net's worth stays above "
                        "v(N) while every admissible deviation vanishes\n"
                      : "violation not witnessed at this horizon\n");
  });
}

int run_sigma_probe(const FamilySource& source, int window, int depth,
                    const Output& out) {
  const kore::FinCofGame game = source.build(nullptr);
  const kore::SigmaProbeResult result =
      kore::sigma_core_probe(game, window, depth);
  const json payload = kore::jsonio::probe_to_json(result, window, depth);
  return out.finish(payload, [&] {
    if (const auto* feasible =
            std::get_if<kore::SigmaProbeFeasible>(&result)) {
      std::cout << "feasible: a sigma-additive charge supported on {1.."
                << window << "} satisfies every depth-" << depth
                << " core constraint\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& [player, weight] : feasible->charge.atom_weights()) {
        rows.push_back({std::to_string(player), q(weight)});
      }
      print_table({"player", "charge"}, rows);
    } else {
      const auto& infeasible = std::get<kore::SigmaProbeInfeasible>(result);
      std::cout << "infeasible within window {1.." << infeasible.window
                << "}, constraint depth " << infeasible.depth
                << ": no sigma-additive charge fits\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& [coalition, multiplier] : infeasible.multipliers) {
        rows.push_back({coalition_label(coalition), q(multiplier)});
      }
      print_table({"constraint coalition", "multiplier"}, rows);
      std::cout << "  efficiency multiplier: "
                << q(infeasible.efficiency_multiplier)
                << "; aggregated gap: " << q(infeasible.gap) << " > 0\n";
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kore -- exact balancedness, core, and sigma-core analysis for "
      "cooperative games with restricted cooperation"};
  app.require_subcommand(1);

  std::string hull_input;
  Output hull_out;
  CLI::App* hull = app.add_subcommand(
      "hull", "atom partition of the field generated by a coalition system");
  hull->add_option("input", hull_input, "JSON coalition system or game file")
      ->required();
  add_output_flags(hull, hull_out);

  std::string balanced_input;
  std::string balanced_variant = "schmeidler";
  Output balanced_out;
  CLI::App* balanced = app.add_subcommand(
      "balanced", "decide balancedness of a finite game, with certificates");
  balanced->add_option("input", balanced_input, "JSON game file")->required();
  balanced->add_option("--variant", balanced_variant,
                       "weight cone: schmeidler (all weights >= 0) or "
                       "grand-free (grand weight unrestricted)");
  add_output_flags(balanced, balanced_out);

  std::string core_input;
  Output core_out;
  CLI::App* core = app.add_subcommand(
      "core", "find a core element or a certificate that the core is empty");
  core->add_option("input", core_input, "JSON game file")->required();
  add_output_flags(core, core_out);

  std::string member_input;
  std::string member_charge;
  Output member_out;
  CLI::App* member = app.add_subcommand(
      "member", "check a charge against every core constraint");
  member->add_option("input", member_input, "JSON game file")->required();
  member->add_option("--charge", member_charge, "JSON charge file")
      ->required();
  add_output_flags(member, member_out);

  FamilySource study_source;
  std::string study_range;
  std::string study_variant = "schmeidler";
  std::string study_mode = "full";
  Output study_out;
  CLI::App* study = app.add_subcommand(
      "truncate-study",
      "balancedness of the finite truncations of a countable-player game");
  add_family_options(study, study_source);
  study->add_option("--m", study_range, "window sizes, e.g. 2..8")->required();
  study->add_option("--variant", study_variant,
                    "weight cone: schmeidler or grand-free");
  study->add_option("--mode", study_mode,
                    "full (every subset; capped by KORE_MAX_FULL_M, default "
                    "10) or sparse (singletons and co-singletons)");
  add_output_flags(study, study_out);

  FamilySource net_source;
  int net_horizon = 12;
  std::string net_charges;
  Output net_out;
  CLI::App* net = app.add_subcommand(
      "net-verify",
      "evaluate the co-singleton violation net against test charges");
  add_family_options(net, net_source);
  net->add_option("--horizon", net_horizon, "last net stage to evaluate")
      ->check(CLI::PositiveNumber);
  net->add_option("--charges", net_charges,
                  "JSON file of test charges (default: diracs at 1..10 plus "
                  "two finitely supported charges)");
  add_output_flags(net, net_out);

  FamilySource probe_source;
  int probe_window = 0;
  int probe_depth = 0;
  Output probe_out;
  CLI::App* probe = app.add_subcommand(
      "sigma-probe",
      "search for a sigma-additive core charge with bounded support");
  add_family_options(probe, probe_source);
  probe->add_option("--window", probe_window,
                    "candidate charges are supported on {1..window}")
      ->required()
      ->check(CLI::PositiveNumber);
  probe->add_option("--depth", probe_depth,
                    "constraints come from coalitions with descriptor size "
                    "at most this")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output_flags(probe, probe_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (hull->parsed()) return run_hull(hull_input, hull_out);
    if (balanced->parsed()) {
      return run_balanced(balanced_input, balanced_variant, balanced_out);
    }
    if (core->parsed()) return run_core(core_input, core_out);
    if (member->parsed()) {
      return run_member(member_input, member_charge, member_out);
    }
    if (study->parsed()) {
      return run_truncate_study(study_source, study_range, study_variant,
                                study_mode, study_out);
    }
    if (net->parsed()) {
      return run_net_verify(net_source, net_horizon, net_charges, net_out);
    }
    if (probe->parsed()) {
      return run_sigma_probe(probe_source, probe_window, probe_depth,
                             probe_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
