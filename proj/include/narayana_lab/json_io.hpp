#pragma once

#include <string>

#include <json.hpp>

#include "narayana_lab/ring.hpp"

namespace nlab {

using Json = nlohmann::ordered_json;

// {"terms":[{"t":int,"q":int,"coeff":"num/den"}]} with terms in canonical
// (t, q) order. The coefficient always carries its denominator ("3/1"), so
// serialization of a canonical value is unique.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

std::string serialize(const LaurentPoly& p);
LaurentPoly deserialize_laurent(const std::string& text);

// {"z":[poly, poly, ...]}, entry i multiplying z^i.
Json to_json(const ZPoly& p);
ZPoly zpoly_from_json(const Json& j);

// "num/den" and "num" are accepted; the denominator must be positive after
// canonicalization and nonzero.
Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& r);

}  // namespace nlab
