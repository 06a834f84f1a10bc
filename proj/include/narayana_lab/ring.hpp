#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nlab {

using Exponent = std::int64_t;
using Rational = mpq_class;

enum class Var { t, q };

struct Monomial {
  Exponent t = 0;
  Exponent q = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Exact Laurent polynomial in t and q with rational coefficients.
///
/// Terms are kept sorted by (e_t, e_q) ascending with no zero coefficients,
/// so structural equality is mathematical equality and the zero polynomial is
/// the empty term list.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): ring literal
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(Exponent et, Exponent eq, const Rational& c = 1);
  static LaurentPoly t(Exponent e = 1) { return monomial(e, 0); }
  static LaurentPoly q(Exponent e = 1) { return monomial(0, e); }
  // Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // A unit of the Laurent ring: a single nonzero term.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const;
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff({0, 0}); }

  // Bounds of the exponent of `v` over all terms; nullopt for zero.
  std::optional<Exponent> min_exponent(Var v) const;
  std::optional<Exponent> max_exponent(Var v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(Exponent dt, Exponent dq) const;  // times t^dt q^dq
  LaurentPoly pow(unsigned e) const;

 private:
  std::vector<Term> terms_;
};

enum class LpOp { add, sub, mul };
LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op);

// Negates every exponent of `v`: p(t, q) -> p(t, 1/q) for Var::q.
LaurentPoly lp_subst_inverse(const LaurentPoly& p, Var v);

// Multiplies every exponent of `v` by `factor`: q -> q^factor.
LaurentPoly lp_subst_power(const LaurentPoly& p, Var v, Exponent factor);

// Exact value at (t0, q0). Throws DivisionByZero when a zero value meets a
// negative exponent.
Rational lp_eval(const LaurentPoly& p, const Rational& t0, const Rational& q0);

// Partial evaluation of a single variable.
LaurentPoly lp_specialize(const LaurentPoly& p, Var v, const Rational& value);

// Quotient c with b*c == a. Throws InexactDivision when b does not divide a
// in the Laurent ring and DivisionByZero when b is zero.
LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Inverse of a unit (single-term) polynomial; NonUnitDivisor otherwise.
LaurentPoly lp_unit_inverse(const LaurentPoly& u);

// Human-readable rendering, highest (e_t, e_q) first: "t^2 + 2*t*q - 1/2*q^-1".
std::string to_string(const LaurentPoly& p);

/// Polynomial in z whose coefficients are Laurent polynomials in t, q.
/// Coefficient i multiplies z^i; the leading stored coefficient is nonzero.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<LaurentPoly> coeffs);
  ZPoly(std::initializer_list<LaurentPoly> coeffs);

  static ZPoly z(unsigned power = 1);
  static ZPoly constant(const LaurentPoly& c);

  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // nullopt for the zero polynomial.
  std::optional<int> degree() const;
  const LaurentPoly& coeff(int i) const;
  const LaurentPoly& leading() const;
  const LaurentPoly& constant_term() const { return coeff(0); }

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const LaurentPoly& c, const ZPoly& p);
  friend bool operator==(const ZPoly& a, const ZPoly& b) = default;

  ZPoly times_z(unsigned power = 1) const;

 private:
  void trim();
  std::vector<LaurentPoly> coeffs_;
};

std::string to_string(const ZPoly& p);

enum class SeriesPoint { zero, infinity };

/// Truncated formal series. At zero, coeffs[i] multiplies z^i; at infinity,
/// coeffs[i] multiplies z^-i. Both hold order + 1 entries.
struct FormalSeries {
  SeriesPoint point = SeriesPoint::zero;
  int order = 0;
  std::vector<LaurentPoly> coeffs;

  // Coefficient of z^power; zero outside the stored range.
  LaurentPoly at(int power) const;
};

// Expansion of num/den at the chosen point through `order`. At zero the
// constant term of den must be a unit; at infinity its leading coefficient
// must be a unit and deg(num) <= deg(den). Throws NonUnitDivisor otherwise.
FormalSeries series_expand(const ZPoly& num, const ZPoly& den, SeriesPoint point, int order);

}  // namespace nlab
