#include "narayana_lab/json_io.hpp"

#include "narayana_lab/errors.hpp"

namespace nlab {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("malformed rational: \"" + text + "\"");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& term : p.terms()) {
    Json entry;
    entry["t"] = term.mono.t;
    entry["q"] = term.mono.q;
    entry["coeff"] = rational_string(term.coeff);
    terms.push_back(std::move(entry));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("polynomial JSON must be an object with a \"terms\" array");
  }
  std::vector<Term> terms;
  for (const auto& entry : j["terms"]) {
    if (!entry.is_object() || !entry.contains("t") || !entry.contains("q") || !entry.contains("coeff") ||
        !entry["t"].is_number_integer() || !entry["q"].is_number_integer() || !entry["coeff"].is_string()) {
      throw ParseError("each term needs integer \"t\", \"q\" and string \"coeff\"");
    }
    terms.push_back({{entry["t"].get<Exponent>(), entry["q"].get<Exponent>()},
                     parse_rational(entry["coeff"].get<std::string>())});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string serialize(const LaurentPoly& p) { return to_json(p).dump(); }

LaurentPoly deserialize_laurent(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return laurent_from_json(j);
}

Json to_json(const ZPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  Json out;
  out["z"] = std::move(coeffs);
  return out;
}

ZPoly zpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("z") || !j["z"].is_array()) {
    throw ParseError("z-polynomial JSON must be an object with a \"z\" array");
  }
  std::vector<LaurentPoly> coeffs;
  for (const auto& c : j["z"]) coeffs.push_back(laurent_from_json(c));
  return ZPoly(std::move(coeffs));
}

}  // namespace nlab
