#pragma once

#include "json.hpp"

#include "qcrys/crystal.hpp"

namespace qcrys {

using Json = nlohmann::ordered_json;

/// {"type", "n", "lambda"} plus "cap" for type C.
Json spec_to_json(const CrystalSpec& spec);
Json state_to_json(const CrystalState& s);

}  // namespace qcrys
