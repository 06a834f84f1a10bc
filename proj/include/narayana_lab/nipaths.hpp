#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "narayana_lab/coeffs.hpp"
#include "narayana_lab/paths.hpp"
#include "narayana_lab/report.hpp"
#include "narayana_lab/ring.hpp"

namespace nlab {

/// Member k runs from (-k, k) to (2m + k, k).
struct PathTuple {
  int m = 0;
  std::vector<SchroederPath> paths;

  friend auto operator<=>(const PathTuple&, const PathTuple&) = default;
  friend bool operator==(const PathTuple&, const PathTuple&) = default;
};

struct TupleOptions {
  // Member k stays at height >= k. Turning this off only keeps every member
  // above the x-axis and leaves the rest to non-intersection.
  bool member_baselines = true;
};

// Members valid, endpoints right, pairwise vertex-disjoint.
bool tuple_valid(const PathTuple& tuple);

// Visits S_(m,n) lowest path first, in lexicographic order of the members.
// SizeLimitExceeded when m + n > limits::kMaxTupleSpan.
void for_each_tuple(int m, int n, const std::function<void(const PathTuple&)>& visit, TupleOptions opts = {});
std::vector<PathTuple> enumerate_tuples(int m, int n, TupleOptions opts = {});

LaurentPoly tuple_weight(const PathTuple& tuple, const CoefficientSeq& cs);
PathStats tuple_stats(const PathTuple& tuple);

// Sum of t^level q^area over S_(m,n).
LaurentPoly tuple_genpoly(int m, int n, TupleOptions opts = {});

// Delta^(s)_n against the signed tuple sum: S_(s-n,n) with weights w for
// s >= n, S_(|s|-n+1,n) with dual weights for s <= -n + 1.
Report tuple_det_check(const CoefficientSeq& cs, int s, int n);

// q^(n(n-1)(3m+2n-1)/3) prod_(k=1..m+n-1) (t + q^(2k-1))^(m+n-k), m in {0, 1}.
LaurentPoly tuple_genpoly_closed(int m, int n);

Json to_json(const PathTuple& tuple);

}  // namespace nlab
