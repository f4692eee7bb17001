#pragma once

#include <json.hpp>

#include "jumploci/liealg/levi.hpp"
#include "jumploci/liealg/lie_algebra.hpp"

namespace jumploci {

/// Accepts a JSON number (integer) or a string "p/q".
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& q);

/// {"dim": n, "basis": [...], "brackets": [{"left": i, "right": j, "value": {"k": coeff}}]}.
/// Throws std::invalid_argument on malformed input; does not validate Jacobi.
LieAlgebra lie_algebra_from_json(const nlohmann::json& j);
nlohmann::ordered_json lie_algebra_to_json(const LieAlgebra& h);

/// {"s": {...}, "g": {...}, "action": [matrix per g basis vector]}.
LeviInput levi_from_json(const nlohmann::json& j);

Matrix<Rational> matrix_from_json(const nlohmann::json& j);

}  // namespace jumploci
