#pragma once

#include "skelcollar/exact/laurent_poly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace skelcollar::exact {

/// Small dense matrix of Laurent polynomials, row-major.
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix poly_identity(std::size_t n);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& a);
PolyMatrix substitute(const PolyMatrix& a, const std::map<std::string, LaurentPoly>& bindings);
PolyMatrix scaled(const PolyMatrix& a, const LaurentPoly& factor);
/// Determinant by cofactor expansion (intended for small sizes).
LaurentPoly determinant(const PolyMatrix& a);
bool is_identity(const PolyMatrix& a);
std::string to_string(const PolyMatrix& a);

nlohmann::json matrix_to_json(const PolyMatrix& a);
PolyMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace skelcollar::exact
