#pragma once

#include <nlohmann/json.hpp>

#include "lefschetz/scenario.hpp"

namespace lefschetz {

// {"rank": n, "operator": "dolbeault" | "deRham" | "generic",
//  "lattice_denominator": D,                     (optional, default 1)
//  "points": [{"name": "...", "tangent_weights": [[...], ...],
//              "bundle": [terms],                (dolbeault)
//              "plus": [terms], "minus": [terms] (generic)}]}

FixedPointScenario scenario_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FixedPointScenario& s);

OperatorKind parse_operator_kind(const std::string& text);

}  // namespace lefschetz
