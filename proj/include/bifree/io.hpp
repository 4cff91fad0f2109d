#pragma once

// JSON forms of pair distributions and multiplicative functions.
//
//   {"trunc": N, "kappa": [{"n": 1, "m": 1, "value": "3/2"}, ...]}
//   ["1", "3/2", "-2"]

#include "bifree/bicum.hpp"
#include "bifree/multfn.hpp"

#include "json.hpp"

#include <string>

namespace bifree {

/// Missing entries are 0; kappa_{0,0} is forced to 1. ParseError on malformed input.
PairDistribution pair_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PairDistribution& d);
PairDistribution load_pair(const std::string& path);

MultFn multfn_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MultFn& f);

}  // namespace bifree
