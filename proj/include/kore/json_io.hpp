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

#ifndef KORE_JSON_IO_HPP
#define KORE_JSON_IO_HPP

#include <json.hpp>

#include "kore/infinite.hpp"

// JSON encodings for every type that crosses the command-line boundary.
// Conventions: rationals travel as "p/q" strings (integers are accepted on
// input; floats are rejected so no value ever rounds), players are 1-based
// integers, coalitions are {"members": [...]} or {"cofinite": [...]}, and
// output objects are emitted with sorted keys so identical runs are
// byte-identical.

namespace kore::jsonio {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& value);

/// {"players": n} or {"players": "countable"}.
PlayerUniverse universe_from_json(const json& j);
json universe_to_json(const PlayerUniverse& universe);

Coalition coalition_from_json(const json& j, const PlayerUniverse& universe);
json coalition_to_json(const Coalition& coalition);

/// {"players": n, "coalitions": [{"members": [...]}, ...]}; values are
/// permitted and ignored, so a game file names a system too.
CoalitionSystem system_from_json(const json& j);

/// {"players": n, "coalitions": [{"members": [...], "value": "p/q"}, ...]}.
/// The empty coalition may be omitted (worth 0); the grand coalition must
/// be listed.
FiniteGame game_from_json(const json& j);
json game_to_json(const FiniteGame& game);

/// {"atoms": {"player": "p/q", ...}, "tail": "p/q"}; tail defaults to 0.
FinCofCharge fincof_charge_from_json(const json& j);
json fincof_charge_to_json(const FinCofCharge& charge);

/// {"atoms": {"player": "p/q", ...}}: each key names an atom of the field
/// by any of its members; unnamed atoms carry 0.  Emitted charges add a
/// "blocks" listing of the atoms.
FiniteCharge finite_charge_from_json(const json& j, const FieldOfSets& field);
json finite_charge_to_json(const FiniteCharge& charge);

/// {"weights": [{"coalition": {...}, "weight": "p/q"}, ...]}.
WeightSystem weight_system_from_json(const json& j,
                                     const PlayerUniverse& universe);
json weight_system_to_json(const WeightSystem& weights);

/// {"family": "co-singleton", "K": 1, "grand": "1"}
/// {"family": "additive", "weights": {"player": "p/q", ...}}
/// {"family": "table", "grand": "p/q", "cofinite_by_size": {...},
///  "finite_by_size": {...}, "exceptions": [{"coalition": ..., "value": ...}]}
FinCofGame fincof_game_from_json(const json& j);

std::string variant_name(BalancednessVariant variant);
BalancednessVariant variant_from_name(const std::string& name);

/// {"verdict": ..., "value"?, "certificate"?, "base"?, "ray"?} -- the
/// verdict body shared by balancedness payloads and study reports.
json verdict_body_to_json(const BalancednessVerdict& verdict);

json balancedness_to_json(const BalancednessVerdict& verdict,
                          BalancednessVariant variant,
                          const Rational& grand_value);
json hull_to_json(const FieldOfSets& field);
json core_result_to_json(const CoreResult& result, const FiniteGame& game);
json membership_to_json(const MembershipReport& report);
json study_to_json(const TruncationStudy& study, TruncationMode mode);
json net_report_to_json(const NetReport& report);
json probe_to_json(const SigmaProbeResult& result, int window, int depth);

}  // namespace kore::jsonio

#endif  // KORE_JSON_IO_HPP
