#pragma once

// JSON form of a Character: an array of {"exp": [...], "coeff": c}, highest weight first.
// Coefficients outside the int64 range are written as decimal strings.

#include "inccoh/char_ring.hpp"

#include <json.hpp>

namespace inccoh {

nlohmann::ordered_json to_json(const Character& f);
nlohmann::ordered_json weight_to_json(const Weight& w);

/// Inverse of to_json. n is needed to rebuild the zero character.
Character character_from_json(const nlohmann::ordered_json& j, int n);

/// Coefficient as a JSON number when it fits in int64, else as a string.
nlohmann::ordered_json coeff_to_json(const Coeff& c);

} // namespace inccoh
