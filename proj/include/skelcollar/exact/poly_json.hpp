#pragma once

#include "skelcollar/exact/laurent_poly.hpp"

#include <json.hpp>

namespace skelcollar::exact {

/// {"vars": [...], "terms": [{"exp": [..], "num": "p", "den": "q"}]}
nlohmann::json poly_to_json(const LaurentPoly& p);

/// Inverse of poly_to_json. Accepts unsorted or repeated variables and
/// unreduced fractions; throws ParseError on malformed input.
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);

}  // namespace skelcollar::exact
