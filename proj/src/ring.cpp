#include "narayana_lab/ring.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "narayana_lab/errors.hpp"

namespace nlab {

namespace {

// Sorts and merges like monomials, dropping zero coefficients.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& term : terms) {
    if (!out.empty() && out.back().mono == term.mono) {
      out.back().coeff += term.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

// Merge of two canonical term lists, the second scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Rational rational_pow(const Rational& base, Exponent e) {
  if (e < 0) {
    if (base == 0) throw DivisionByZero("negative power of zero in evaluation");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational result = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  auto part = [&s](const char* name, Exponent e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  part("t", m.t);
  part("q", m.q);
  return s;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(Exponent et, Exponent eq, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({{et, eq}, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{0, 0});
}

Rational LaurentPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& term, const Monomial& key) { return term.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

std::optional<Exponent> LaurentPoly::min_exponent(Var v) const {
  if (terms_.empty()) return std::nullopt;
  Exponent best = v == Var::t ? terms_[0].mono.t : terms_[0].mono.q;
  for (const auto& term : terms_) best = std::min(best, v == Var::t ? term.mono.t : term.mono.q);
  return best;
}

std::optional<Exponent> LaurentPoly::max_exponent(Var v) const {
  if (terms_.empty()) return std::nullopt;
  Exponent best = v == Var::t ? terms_[0].mono.t : terms_[0].mono.q;
  for (const auto& term : terms_) best = std::max(best, v == Var::t ? term.mono.t : term.mono.q);
  return best;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    const auto& [m, c] = b.terms_[0];
    LaurentPoly p = a.shifted(m.t, m.q);
    if (c != 1) {
      for (auto& term : p.terms_) term.coeff *= c;
    }
    return p;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      raw.push_back({{x.mono.t + y.mono.t, x.mono.q + y.mono.q}, x.coeff * y.coeff});
    }
  }
  return LaurentPoly::from_terms(std::move(raw));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::shifted(Exponent dt, Exponent dq) const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) {
    term.mono.t += dt;
    term.mono.q += dq;
  }
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = 1;
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op) {
  switch (op) {
    case LpOp::add:
      return a + b;
    case LpOp::sub:
      return a - b;
    case LpOp::mul:
      return a * b;
  }
  return {};
}

LaurentPoly lp_subst_inverse(const LaurentPoly& p, Var v) { return lp_subst_power(p, v, -1); }

LaurentPoly lp_subst_power(const LaurentPoly& p, Var v, Exponent factor) {
  std::vector<Term> terms = p.terms();
  for (auto& term : terms) {
    if (v == Var::t) {
      term.mono.t *= factor;
    } else {
      term.mono.q *= factor;
    }
  }
  if (factor == 0) return LaurentPoly::from_terms(std::move(terms));
  // A nonzero factor maps distinct monomials to distinct monomials, so only
  // the order can change.
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return LaurentPoly::from_terms(std::move(terms));
}

Rational lp_eval(const LaurentPoly& p, const Rational& t0, const Rational& q0) {
  Rational sum = 0;
  for (const auto& term : p.terms()) {
    sum += term.coeff * rational_pow(t0, term.mono.t) * rational_pow(q0, term.mono.q);
  }
  return sum;
}

LaurentPoly lp_specialize(const LaurentPoly& p, Var v, const Rational& value) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& term : p.terms()) {
    if (v == Var::t) {
      terms.push_back({{0, term.mono.q}, term.coeff * rational_pow(value, term.mono.t)});
    } else {
      terms.push_back({{term.mono.t, 0}, term.coeff * rational_pow(value, term.mono.q)});
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly lp_unit_inverse(const LaurentPoly& u) {
  if (u.is_zero()) throw DivisionByZero("inverse of the zero polynomial");
  if (!u.is_unit()) throw NonUnitDivisor("not a unit of the Laurent ring: " + to_string(u));
  const auto& [m, c] = u.terms()[0];
  return LaurentPoly::monomial(-m.t, -m.q, Rational(1) / c);
}

LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_unit()) return a * lp_unit_inverse(b);

  // Strip the monomial content of both operands; the remaining quotient must
  // then be an ordinary polynomial, found by division with lex leading terms.
  const Exponent at = *a.min_exponent(Var::t);
  const Exponent aq = *a.min_exponent(Var::q);
  const Exponent bt = *b.min_exponent(Var::t);
  const Exponent bq = *b.min_exponent(Var::q);
  const LaurentPoly divisor = b.shifted(-bt, -bq);
  LaurentPoly remainder = a.shifted(-at, -aq);
  const Term& lead = divisor.terms().back();

  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& top = remainder.terms().back();
    const Exponent dt = top.mono.t - lead.mono.t;
    const Exponent dq = top.mono.q - lead.mono.q;
    if (dt < 0 || dq < 0) {
      throw InexactDivision("(" + to_string(a) + ") is not divisible by (" + to_string(b) + ")");
    }
    Rational c = top.coeff / lead.coeff;
    remainder -= divisor.shifted(dt, dq).scaled(c);
    quotient.push_back({{dt, dq}, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(quotient)).shifted(at - bt, aq - bq);
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_string(it->mono);
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << "*" << mono;
    }
  }
  return out.str();
}

ZPoly::ZPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<LaurentPoly> coeffs) : coeffs_(coeffs) { trim(); }

ZPoly ZPoly::z(unsigned power) {
  std::vector<LaurentPoly> c(power + 1);
  c[power] = 1;
  return ZPoly(std::move(c));
}

ZPoly ZPoly::constant(const LaurentPoly& c) { return ZPoly(std::vector<LaurentPoly>{c}); }

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> ZPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

const LaurentPoly& ZPoly::coeff(int i) const {
  static const LaurentPoly kZero;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const LaurentPoly& ZPoly::leading() const {
  static const LaurentPoly kZero;
  return coeffs_.empty() ? kZero : coeffs_.back();
}

ZPoly ZPoly::operator-() const {
  ZPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ZPoly(std::move(c));
}

ZPoly operator*(const LaurentPoly& c, const ZPoly& p) {
  std::vector<LaurentPoly> out = p.coeffs_;
  for (auto& x : out) x = c * x;
  return ZPoly(std::move(out));
}

ZPoly ZPoly::times_z(unsigned power) const {
  if (is_zero()) return {};
  std::vector<LaurentPoly> out(power);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return ZPoly(std::move(out));
}

std::string to_string(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = *p.degree(); i >= 0; --i) {
    const LaurentPoly& c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string zpart = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (zpart.empty()) {
      s += "(" + to_string(c) + ")";
    } else if (c == LaurentPoly(1)) {
      s += zpart;
    } else {
      s += "(" + to_string(c) + ")*" + zpart;
    }
  }
  return s;
}

LaurentPoly FormalSeries::at(int power) const {
  const int index = point == SeriesPoint::zero ? power : -power;
  if (index < 0 || index >= static_cast<int>(coeffs.size())) return {};
  return coeffs[static_cast<std::size_t>(index)];
}

namespace {

// Power series quotient n(w)/d(w) at w = 0, d(0) a unit.
std::vector<LaurentPoly> divide_at_zero(const std::vector<LaurentPoly>& n, const std::vector<LaurentPoly>& d,
                                        int order) {
  auto get = [](const std::vector<LaurentPoly>& v, int i) -> LaurentPoly {
    return i >= 0 && i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : LaurentPoly{};
  };
  const LaurentPoly d0 = get(d, 0);
  if (d0.is_zero()) throw DivisionByZero("series divisor vanishes at the expansion point");
  if (!d0.is_unit()) throw NonUnitDivisor("series divisor is not a unit at the expansion point: " + to_string(d0));
  const LaurentPoly inv = lp_unit_inverse(d0);
  std::vector<LaurentPoly> s(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    LaurentPoly acc = get(n, i);
    for (int j = 1; j <= i && j < static_cast<int>(d.size()); ++j) {
      acc -= d[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(i - j)];
    }
    s[static_cast<std::size_t>(i)] = acc * inv;
  }
  return s;
}

}  // namespace

FormalSeries series_expand(const ZPoly& num, const ZPoly& den, SeriesPoint point, int order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  if (den.is_zero()) throw DivisionByZero("series expansion with zero denominator");
  FormalSeries out;
  out.point = point;
  out.order = order;
  if (point == SeriesPoint::zero) {
    out.coeffs = divide_at_zero(num.coeffs(), den.coeffs(), order);
    return out;
  }
  // At infinity substitute w = 1/z and multiply through by w^deg(den).
  const int d = *den.degree();
  if (!num.is_zero() && *num.degree() > d) {
    throw DomainError("expansion at infinity would contain positive powers of z");
  }
  std::vector<LaurentPoly> n(static_cast<std::size_t>(d) + 1);
  std::vector<LaurentPoly> dd(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    n[static_cast<std::size_t>(i)] = num.coeff(d - i);
    dd[static_cast<std::size_t>(i)] = den.coeff(d - i);
  }
  out.coeffs = divide_at_zero(n, dd, order);
  return out;
}

}  // namespace nlab
