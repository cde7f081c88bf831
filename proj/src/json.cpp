#include "weylkl/json.hpp"

#include <stdexcept>

namespace weylkl {

nlohmann::json to_json(const Polynomial& p) { return nlohmann::json(p.coeffs()); }

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an integer array");
  std::vector<int64_t> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_number_integer())
      throw std::invalid_argument("polynomial JSON must contain only integers");
    coeffs.push_back(c.get<int64_t>());
  }
  return Polynomial::from_coeffs(std::move(coeffs));
}

nlohmann::json to_json(const KGClass& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, coeff] : c.terms()) {
    terms.push_back({{"word", w.word()}, {"coeff", coeff}});
  }
  return {{"basis", std::string(1, static_cast<char>(c.basis()))},
          {"char", c.regime() == Regime::char_p ? "p" : "0"},
          {"terms", terms}};
}

KGClass kgclass_from_json(const nlohmann::json& j, const WeylGroup& g) {
  const std::string basis = j.at("basis").get<std::string>();
  if (basis != "M" && basis != "L")
    throw std::invalid_argument("KGClass JSON: basis must be \"M\" or \"L\"");
  const std::string chr = j.at("char").get<std::string>();
  if (chr != "0" && chr != "p")
    throw std::invalid_argument("KGClass JSON: char must be \"0\" or \"p\"");
  KGClass out(basis == "M" ? Basis::M : Basis::L,
              chr == "p" ? Regime::char_p : Regime::char_0, &g);
  for (const auto& t : j.at("terms")) {
    std::vector<int> word = t.at("word").get<std::vector<int>>();
    out.add(g.from_word(word), t.at("coeff").get<int64_t>());
  }
  return out;
}

}  // namespace weylkl
