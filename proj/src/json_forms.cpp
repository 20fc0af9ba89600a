#include "cjones/json_forms.hpp"

namespace cjones {

nlohmann::json lp_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) terms.push_back(nlohmann::json::array({t.exp, t.coef.get_str()}));
  return nlohmann::json{{"unit", 2}, {"terms", std::move(terms)}};
}

LaurentPoly lp_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("unit") || !j.contains("terms"))
    throw SchemaError("polynomial must be an object with 'unit' and 'terms'");
  if (j.at("unit") != 2) throw SchemaError("unsupported polynomial exponent unit");
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw SchemaError("'terms' must be an array");
  std::vector<std::pair<std::int64_t, BigInt>> raw;
  std::int64_t prev = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
      throw SchemaError("term must be [integer exponent, \"coefficient\"]");
    const std::int64_t e = t[0].get<std::int64_t>();
    if (k > 0 && e <= prev) throw SchemaError("terms must be strictly ascending in exponent");
    prev = e;
    BigInt c;
    if (c.set_str(t[1].get<std::string>(), 10) != 0) throw SchemaError("bad coefficient string");
    if (c == 0) throw SchemaError("zero coefficient in canonical form");
    raw.emplace_back(e, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(raw));
}

}  // namespace cjones
