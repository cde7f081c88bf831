#pragma once

#include <json.hpp>

#include "weylkl/kgroup.hpp"
#include "weylkl/polynomial.hpp"
#include "weylkl/weyl.hpp"

namespace weylkl {

// Polynomial <-> ascending integer coefficient array, e.g. 1+q <-> [1,1].
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

// KGClass <-> { "basis": "M"|"L", "char": "0"|"p",
//               "terms": [ {"word": [int...], "coeff": int}, ... ] }
nlohmann::json to_json(const KGClass& c);
KGClass kgclass_from_json(const nlohmann::json& j, const WeylGroup& g);

}  // namespace weylkl
