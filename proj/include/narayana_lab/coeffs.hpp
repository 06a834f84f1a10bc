#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "narayana_lab/ring.hpp"

namespace nlab {

/// Recurrence data b_n (n >= 1), c_n (n >= 0) and the first moment kappa.
///
/// Coefficients are produced on demand by the stored sources, so one value
/// can describe an infinite family such as the q-Narayana coefficients.
/// Asking for an index the source does not define throws
/// UndefinedCoefficient.
class CoefficientSeq {
 public:
  using Source = std::function<LaurentPoly(int)>;

  CoefficientSeq(Source b, Source c, LaurentPoly kappa, std::string name = {});

  LaurentPoly b(int n) const;
  LaurentPoly c(int n) const;
  const LaurentPoly& kappa() const { return kappa_; }
  const std::string& name() const { return name_; }

  CoefficientSeq with_kappa(LaurentPoly kappa) const;

 private:
  Source b_;
  Source c_;
  LaurentPoly kappa_;
  std::string name_;
};

// b_n = q^(2n-1), c_n = t q^(2n).
CoefficientSeq qnarayana_coeffs(const LaurentPoly& kappa = 1);

// b_from_one[i] is b_(i+1); c_from_zero[i] is c_i.
CoefficientSeq tabulated_coeffs(std::vector<LaurentPoly> b_from_one, std::vector<LaurentPoly> c_from_zero,
                                LaurentPoly kappa, std::string name = "tabulated");

// Nonzero rationals with numerators in [-9, 9] and denominators in [1, 9],
// drawn from a seeded mt19937_64; defines b_1..b_count and c_0..c_count.
CoefficientSeq random_rational_coeffs(std::uint64_t seed, int count);

// Independent symbols kappa, b_n, c_n packed into t and q exponents by a
// balanced base-16 Kronecker substitution: t carries kappa, c_0..c_4 and q
// carries b_1..b_6. Monomials whose symbol exponents all lie in [-7, 7] map
// to distinct (t, q) monomials, so equality of encoded polynomials is
// equality of the symbolic polynomials.
namespace generic {

inline constexpr int kMaxB = 6;
inline constexpr int kMaxC = 4;

LaurentPoly kappa();
LaurentPoly b(int n);
LaurentPoly c(int n);

CoefficientSeq coeffs();

// Decodes an encoded polynomial into readable symbolic form, e.g.
// "-kappa^2*b1*c0*c1^2 - ...". Intended for diagnostics.
std::string decode(const LaurentPoly& p);

}  // namespace generic

}  // namespace nlab
