#pragma once

#include "coorbital/exactq/bipoly.hpp"

#include <json.hpp>

namespace coorbital::exactq {

/// Array of "num/den" strings, lowest degree first.
nlohmann::json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j, char var = 't');

/// Array (indexed by c-degree) of t-coefficient arrays.
nlohmann::json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

}  // namespace coorbital::exactq
