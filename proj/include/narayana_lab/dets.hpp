#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "narayana_lab/coeffs.hpp"
#include "narayana_lab/lbp.hpp"
#include "narayana_lab/report.hpp"
#include "narayana_lab/ring.hpp"

namespace nlab {

using Matrix = std::vector<std::vector<LaurentPoly>>;

enum class DetAlgorithm {
  minors,   // Laplace expansion memoized on column subsets, O(n 2^n)
  bareiss,  // fraction-free elimination with exact division
};

LaurentPoly determinant(const Matrix& m, DetAlgorithm alg = DetAlgorithm::minors);

// Entry (j, k) is f_(s - j + k), j, k = 0..n-1.
Matrix toeplitz_matrix(const MomentTable& f, int s, int n);
LaurentPoly toeplitz_det(const MomentTable& f, int s, int n, DetAlgorithm alg = DetAlgorithm::minors);

// Product formulas for Delta^(1)_n (s = 1) and, through the dual
// coefficients, Delta^(0)_n (s = 0).
LaurentPoly det_closed_cfs(const CoefficientSeq& cs, int s, int n);

// Cross-multiplied forms of
//   b_n = -Delta^(1)_(n+1) Delta^(0)_(n-1) / (Delta^(1)_n Delta^(0)_n),
//   c_n =  Delta^(1)_(n+1) Delta^(0)_n / (Delta^(1)_n Delta^(0)_(n+1)).
Report det_ratio_check(const CoefficientSeq& cs, int nmax);

// det(N_(s+j-k-1))_(j,k=0..n-1), negative indices per narayana_neg.
LaurentPoly narayana_det(int s, int n, DetAlgorithm alg = DetAlgorithm::minors);

// Closed values of the q-Narayana determinant on the band s in {0, 1}.
LaurentPoly det_band_closed(int s, int n);

// Closed form valid for -n <= s <= n + 1; DomainError outside.
LaurentPoly det_closed(int s, int n);

/// Table of N^(s)_n values filled by the Sylvester recurrence.
///
/// Entries with n = 0 are 1 and entries with n = -1 are 0 by convention.
/// A seed callback supplies the starting band.
class DetTable {
 public:
  using Seed = std::function<std::optional<LaurentPoly>(int s, int n)>;

  DetTable() = default;
  explicit DetTable(Seed seed) : seed_(std::move(seed)) {}

  // Seeds s in {0, 1} from det_band_closed.
  static DetTable band_seeded();

  std::optional<LaurentPoly> find(int s, int n) const;
  void set(int s, int n, LaurentPoly value);
  const std::map<std::pair<int, int>, LaurentPoly>& entries() const { return entries_; }

 private:
  Seed seed_;
  std::map<std::pair<int, int>, LaurentPoly> entries_;
};

// Solves N^(s)_(n+1) N^(s)_(n-1) - (N^(s)_n)^2 + N^(s+1)_n N^(s-1)_n = 0 for
// the requested entry, recursing toward the seeded band and caching every
// intermediate value in `table`. DivisionByZero when a divisor entry
// vanishes; SizeLimitExceeded when |s| + n exceeds limits::kMaxSylvesterSpan.
LaurentPoly sylvester_extend(DetTable& table, int s, int n);

// The identity above on every stored entry whose neighbours are available.
Report sylvester_identity_check(const DetTable& table);

// Gaussian binomial via the Pascal recurrence; DomainError unless 0 <= n <= m.
LaurentPoly qbinom(int m, int n);
// Same value from the product formula by exact division.
LaurentPoly qbinom_product(int m, int n);

// Closed form of N^(n+2)_n.
LaurentPoly det_s_np2(int n);

}  // namespace nlab
