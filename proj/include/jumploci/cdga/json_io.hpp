#pragma once

#include <json.hpp>

#include "jumploci/cdga/cdga.hpp"

namespace jumploci {

/// {"degrees": [["1"], ["a", "b"], [...]],
///  "products": [{"left": "a", "right": "b", "value": {"name": coeff}}],
///  "differential": [{"source": "x", "value": {"name": coeff}}]}
/// Reversed products are filled in with the Koszul sign; an explicitly given
/// reversed product must agree. Throws std::invalid_argument on malformed
/// input. Run cdga_violation afterwards for the algebraic axioms.
CDGA cdga_from_json(const nlohmann::json& j);
nlohmann::ordered_json cdga_to_json(const CDGA& a);

}  // namespace jumploci
