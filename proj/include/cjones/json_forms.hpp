#pragma once

#include <nlohmann/json.hpp>

#include "cjones/laurent.hpp"

namespace cjones {

/// Canonical form {"unit": 2, "terms": [[e, "c"], ...]} with e in units of
/// q^(1/2) and decimal coefficient strings, ascending in e.
nlohmann::json lp_to_json(const LaurentPoly& p);

/// Inverse of lp_to_json. Throws SchemaError on malformed input, including
/// unsorted or zero terms.
LaurentPoly lp_from_json(const nlohmann::json& j);

}  // namespace cjones
