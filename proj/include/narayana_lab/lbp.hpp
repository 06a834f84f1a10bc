#pragma once

#include <utility>
#include <vector>

#include "narayana_lab/coeffs.hpp"
#include "narayana_lab/report.hpp"
#include "narayana_lab/ring.hpp"

namespace nlab {

/// Moments f_k over a contiguous window [kmin, kmax].
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(int kmin, std::vector<LaurentPoly> values);

  int kmin() const { return kmin_; }
  int kmax() const { return kmin_ + static_cast<int>(values_.size()) - 1; }
  bool contains(int k) const { return k >= kmin() && k <= kmax(); }
  // WindowExceeded outside the window.
  const LaurentPoly& at(int k) const;

 private:
  int kmin_ = 0;
  std::vector<LaurentPoly> values_;
};

// f_(k+1) = kappa * sum over S_k of w(P) and f_(-k) = kappa~ * sum over S_k
// of w~(P), the dual labels coming from dual_coeffs.
LaurentPoly moment(const CoefficientSeq& cs, int k);
MomentTable moments(const CoefficientSeq& cs, int kmin, int kmax);

// P_0..P_N from P_(n+1) = (z - c_n) P_n - b_n z P_(n-1), P_0 = 1, P_1 = z - c_0.
// ZeroCoefficient when a needed b_n or c_n vanishes.
std::vector<ZPoly> lbp_sequence(const CoefficientSeq& cs, int N);

// Q_0..Q_N: same recurrence from Q_0 = 0, Q_1 = kappa.
std::vector<ZPoly> lbp_numerators(const CoefficientSeq& cs, int N);

// b~_n = b_n / (c_(n-1) c_n), c~_n = 1 / c_n, kappa~ = kappa / c_0, all by
// exact division (InexactDivision when a quotient leaves the ring).
CoefficientSeq dual_coeffs(const CoefficientSeq& cs);

// z^n P(1/z) / P(0). NonUnitDivisor when P(0) is not a unit.
ZPoly invert_lbp(const ZPoly& p);

// Linear extension of z^k -> f_k applied to expr(z) * z^shift.
LaurentPoly functional_apply(const MomentTable& f, const ZPoly& expr, int shift = 0);

struct LBPSystem {
  CoefficientSeq cs;
  std::vector<ZPoly> P;
  std::vector<ZPoly> Q;
  MomentTable moments;

  // P and Q through degree N, moments over [kmin, kmax].
  static LBPSystem build(const CoefficientSeq& cs, int N, int kmin, int kmax);
  // Window [-(N + 1), N + 2], enough for orthogonality and the bordered
  // determinant up to degree N.
  static LBPSystem build(const CoefficientSeq& cs, int N);
};

// F[P_n z^-k] = 0 for k < n and = h_n != 0 for k = n, with h_n checked
// against Delta^(0)_(n+1) / Delta^(0)_n by cross-multiplication.
Report orthogonality_check(const LBPSystem& sys, int N);

// Q_n/P_n against F+ through z^-n at infinity and F- through z^(n-1) at
// zero, plus the first disagreeing order within `extra` further terms.
Report pade_check(const LBPSystem& sys, int n, int extra);

// f_(n,k) := F[P_n z^(k+1)] satisfies
// f_(n,k) = f_(n+1,k-1) + c_n f_(n,k-1) + b_n f_(n-1,k)
// with f_(-1,k) = 0 and f_(n,-1) = kappa~ delta_(n,0).
Report generalized_moment_check(const LBPSystem& sys, int nmax, int kmax);

// Series coefficients of the n-th convergent against explicitly enumerated
// path sums grouped by length, at infinity and at zero.
Report tfrac_series_check(const CoefficientSeq& cs, int order, int n);

// P_n from the bordered moment determinant divided by Delta^(0)_n.
ZPoly lbp_determinant_form(const LBPSystem& sys, int n);

// The n-th convergent of the T-fraction flattened bottom-up into a
// (numerator, denominator) pair.
std::pair<ZPoly, ZPoly> tfraction_convergent(const CoefficientSeq& cs, int n);

// Cross-multiplied comparison of the flattened convergent with Q_n/P_n.
Report convergent_check(const CoefficientSeq& cs, int nmax);

// P_n(0) = (-1)^n c_0 ... c_(n-1).
Report constant_term_check(const CoefficientSeq& cs, int nmax);

// The inverted polynomials obey the recurrence with dual coefficients.
Report inverted_recurrence_check(const CoefficientSeq& cs, int nmax);

// Moments of the dual system satisfy f~_k = f_(1-k) for |k| <= kmax.
Report moment_duality_check(const CoefficientSeq& cs, int kmax);

}  // namespace nlab
