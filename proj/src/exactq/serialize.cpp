#include "coorbital/exactq/serialize.hpp"

namespace coorbital::exactq {

nlohmann::json to_json(const UniPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

UniPoly unipoly_from_json(const nlohmann::json& j, char var) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigRat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) coeffs.push_back(parse_rational(item.get<std::string>()));
  return UniPoly(std::move(coeffs), var);
}

nlohmann::json to_json(const BiPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int k = 0; k <= p.degree_c(); ++k) arr.push_back(to_json(p.coeff_c(static_cast<std::size_t>(k))));
  return arr;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("bivariate polynomial JSON must be an array");
  std::vector<UniPoly> rows;
  rows.reserve(j.size());
  for (const auto& item : j) rows.push_back(unipoly_from_json(item, 't'));
  return BiPoly(std::move(rows));
}

}  // namespace coorbital::exactq
