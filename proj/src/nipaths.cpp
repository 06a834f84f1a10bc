#include "narayana_lab/nipaths.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "narayana_lab/dets.hpp"
#include "narayana_lab/errors.hpp"
#include "narayana_lab/lbp.hpp"
#include "narayana_lab/limits.hpp"

namespace nlab {

namespace {

// Occupancy grid over the tuple's bounding box.
class Occupancy {
 public:
  Occupancy(int m, int n) : x0_(-n), width_(2 * m + 2 * n + 1), height_(m + 2 * n + 1) {
    cells_.assign(static_cast<std::size_t>(width_ * height_), 0);
  }

  bool busy(std::int64_t x, std::int64_t y) const {
    const auto i = index(x, y);
    return i >= 0 && cells_[static_cast<std::size_t>(i)] > 0;
  }
  void mark(std::int64_t x, std::int64_t y, int delta) {
    const auto i = index(x, y);
    if (i < 0) throw InvariantViolation("tuple point outside the occupancy grid");
    cells_[static_cast<std::size_t>(i)] += delta;
  }

 private:
  std::int64_t index(std::int64_t x, std::int64_t y) const {
    if (x < x0_ || x >= x0_ + width_ || y < 0 || y >= height_) return -1;
    return (y * width_) + (x - x0_);
  }

  std::int64_t x0_;
  std::int64_t width_;
  std::int64_t height_;
  std::vector<int> cells_;
};

struct TupleSearch {
  int m;
  int n;
  TupleOptions opts;
  const std::function<void(const PathTuple&)>& visit;
  Occupancy occ;
  PathTuple current;
  std::vector<Step> steps;

  void member(int k) {
    if (k == n) {
      visit(current);
      return;
    }
    const std::int64_t x = -k;
    const std::int64_t y = k;
    if (occ.busy(x, y)) return;
    occ.mark(x, y, 1);
    steps.clear();
    extend(k, x, y);
    occ.mark(x, y, -1);
  }

  void extend(int k, std::int64_t x, std::int64_t y) {
    const std::int64_t end_x = 2 * m + k;
    const std::int64_t floor = opts.member_baselines ? k : 0;
    const std::int64_t left = end_x - x;
    if (left == 0) {
      const auto saved = steps;
      current.paths.emplace_back(LatticePoint{-k, k}, steps, opts.member_baselines ? k : 0);
      member(k + 1);
      current.paths.pop_back();
      steps = saved;
      return;
    }
    // Up
    if (std::llabs(y + 1 - k) <= left - 1 && !occ.busy(x + 1, y + 1)) {
      take(k, Step::Up, {{x + 1, y + 1}}, x + 1, y + 1);
    }
    // Down
    if (y - 1 >= floor && std::llabs(y - 1 - k) <= left - 1 && !occ.busy(x + 1, y - 1)) {
      take(k, Step::Down, {{x + 1, y - 1}}, x + 1, y - 1);
    }
    // Level
    if (left >= 2 && std::llabs(y - k) <= left - 2 && !occ.busy(x + 1, y) && !occ.busy(x + 2, y)) {
      take(k, Step::Level, {{x + 1, y}, {x + 2, y}}, x + 2, y);
    }
  }

  void take(int k, Step s, std::initializer_list<LatticePoint> pts, std::int64_t nx, std::int64_t ny) {
    for (const auto& p : pts) occ.mark(p.x, p.y, 1);
    steps.push_back(s);
    extend(k, nx, ny);
    steps.pop_back();
    for (const auto& p : pts) occ.mark(p.x, p.y, -1);
  }
};

LaurentPoly sign_pow(long e) { return e % 2 == 0 ? LaurentPoly(1) : LaurentPoly(-1); }

}  // namespace

bool tuple_valid(const PathTuple& tuple) {
  std::set<LatticePoint> seen;
  for (std::size_t k = 0; k < tuple.paths.size(); ++k) {
    const auto& p = tuple.paths[k];
    const auto kk = static_cast<std::int64_t>(k);
    if (!p.valid() || p.start() != LatticePoint{-kk, kk} || p.endpoint() != LatticePoint{2 * tuple.m + kk, kk}) {
      return false;
    }
    for (const auto& pt : p.occupied_points()) {
      if (!seen.insert(pt).second) return false;
    }
  }
  return true;
}

void for_each_tuple(int m, int n, const std::function<void(const PathTuple&)>& visit, TupleOptions opts) {
  if (m < 0 || n < 0) throw DomainError("tuple enumeration needs m, n >= 0");
  if (m + n > limits::kMaxTupleSpan) {
    throw SizeLimitExceeded("tuple enumeration is limited to m + n <= " + std::to_string(limits::kMaxTupleSpan));
  }
  TupleSearch search{m, n, opts, visit, Occupancy(m, n), PathTuple{m, {}}, {}};
  search.member(0);
}

std::vector<PathTuple> enumerate_tuples(int m, int n, TupleOptions opts) {
  std::vector<PathTuple> out;
  for_each_tuple(m, n, [&out](const PathTuple& t) { out.push_back(t); }, opts);
  return out;
}

LaurentPoly tuple_weight(const PathTuple& tuple, const CoefficientSeq& cs) {
  LaurentPoly w = 1;
  for (const auto& p : tuple.paths) w *= path_weight(p, cs);
  return w;
}

PathStats tuple_stats(const PathTuple& tuple) {
  PathStats total;
  for (const auto& p : tuple.paths) {
    const PathStats st = path_stats(p);
    total.level += st.level;
    total.area += st.area;
    total.length += st.length;
  }
  return total;
}

LaurentPoly tuple_genpoly(int m, int n, TupleOptions opts) {
  // Accumulate exponent counts first; building a polynomial per tuple would
  // dominate the run time for the larger spans.
  std::map<Monomial, long> counts;
  for_each_tuple(
      m, n,
      [&counts](const PathTuple& t) {
        const PathStats st = tuple_stats(t);
        ++counts[{st.level, st.area}];
      },
      opts);
  std::vector<Term> terms;
  for (const auto& [mono, c] : counts) terms.push_back({mono, Rational(c)});
  return LaurentPoly::from_terms(std::move(terms));
}

Report tuple_det_check(const CoefficientSeq& cs, int s, int n) {
  if (n < 0) throw DomainError("determinant order must be nonnegative");
  const bool primal = s >= n;
  if (!primal && s > -n + 1) {
    throw DomainError("no tuple form for -n + 1 < s < n (s = " + std::to_string(s) + ", n = " +
                      std::to_string(n) + ")");
  }
  const MomentTable f = moments(cs, s - n + 1, s + n - 1 < s - n + 1 ? s - n + 1 : s + n - 1);
  const LaurentPoly det = toeplitz_det(f, s, n);

  const CoefficientSeq src = primal ? cs : dual_coeffs(cs);
  const int m = primal ? s - n : std::abs(s) - n + 1;
  LaurentPoly prefactor = sign_pow(static_cast<long>(n) * (n - 1) / 2) * src.kappa().pow(static_cast<unsigned>(n));
  for (int j = 1; j < n; ++j) prefactor *= src.b(j).pow(static_cast<unsigned>(n - j));
  LaurentPoly sum;
  for_each_tuple(m, n, [&](const PathTuple& t) { sum += tuple_weight(t, src); });
  return {make_check(primal ? "tuple_det" : "tuple_det_dual", n, s, det, prefactor * sum)};
}

LaurentPoly tuple_genpoly_closed(int m, int n) {
  if (m != 0 && m != 1) throw DomainError("the closed tuple form covers m in {0, 1}");
  if (n < 0) throw DomainError("tuple_genpoly_closed needs n >= 0");
  const Exponent nn = n;
  LaurentPoly out = LaurentPoly::q(nn * (nn - 1) * (3 * m + 2 * nn - 1) / 3);
  for (int k = 1; k <= m + n - 1; ++k) {
    out *= (LaurentPoly::t() + LaurentPoly::q(2 * k - 1)).pow(static_cast<unsigned>(m + n - k));
  }
  return out;
}

Json to_json(const PathTuple& tuple) {
  Json out;
  out["m"] = tuple.m;
  out["paths"] = Json::array();
  for (const auto& p : tuple.paths) out["paths"].push_back(to_json(p));
  return out;
}

}  // namespace nlab
