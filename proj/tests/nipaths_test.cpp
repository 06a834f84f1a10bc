#include <doctest.h>

#include <algorithm>
#include <set>

#include "narayana_lab/errors.hpp"
#include "narayana_lab/limits.hpp"
#include "narayana_lab/nipaths.hpp"

using namespace nlab;

namespace {

LaurentPoly m(Exponent et, Exponent eq, long k = 1) { return LaurentPoly::monomial(et, eq, k); }

// Cartesian product of shifted Schroeder paths, filtered for shared points.
std::vector<PathTuple> brute_force(int mm, int n) {
  std::vector<std::vector<SchroederPath>> members;
  for (int k = 0; k < n; ++k) {
    std::vector<SchroederPath> shifted;
    for (const auto& p : enumerate_paths(mm + k)) shifted.emplace_back(LatticePoint{-k, k}, p.steps(), k);
    members.push_back(std::move(shifted));
  }
  std::vector<PathTuple> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    PathTuple t{mm, {}};
    std::set<LatticePoint> seen;
    bool disjoint = true;
    for (int k = 0; k < n; ++k) {
      t.paths.push_back(members[k][pick[k]]);
      for (const auto& pt : t.paths.back().occupied_points()) disjoint = disjoint && seen.insert(pt).second;
    }
    if (disjoint) out.push_back(t);
    int k = 0;
    while (k < n && ++pick[k] == members[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
  return out;
}

LaurentPoly stat_sum(const std::vector<PathTuple>& tuples) {
  LaurentPoly total;
  for (const auto& t : tuples) {
    const PathStats st = tuple_stats(t);
    total += m(st.level, st.area);
  }
  return total;
}

}  // namespace

TEST_CASE("enumeration against a brute-force product") {
  for (int mm = 0; mm <= 3; ++mm)
    for (int n = 0; n <= 3 && mm + n <= 4; ++n) {
      auto fast = enumerate_tuples(mm, n);
      auto slow = brute_force(mm, n);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      CHECK(fast == slow);
      for (const auto& t : fast) CHECK(tuple_valid(t));
    }
}

TEST_CASE("tuple counts") {
  CHECK(enumerate_tuples(0, 1).size() == 1);
  CHECK(enumerate_tuples(0, 1)[0].paths[0].steps().empty());
  CHECK(enumerate_tuples(1, 2).size() == 8);
  CHECK(enumerate_tuples(3, 2).size() == 568);
  CHECK_THROWS_AS(enumerate_tuples(4, limits::kMaxTupleSpan), SizeLimitExceeded);
}

TEST_CASE("dropping member baselines changes nothing") {
  for (int mm = 0; mm <= 2; ++mm)
    for (int n = 1; n <= 3; ++n)
      CHECK(enumerate_tuples(mm, n, {.member_baselines = false}).size() == enumerate_tuples(mm, n).size());
}

TEST_CASE("generating polynomials") {
  CHECK(tuple_genpoly(0, 1) == 1);
  CHECK(tuple_genpoly(1, 1) == m(1, 0) + m(0, 1));
  CHECK(tuple_genpoly(0, 2) == m(0, 2) * (m(1, 0) + m(0, 1)));
  const LaurentPoly tq = m(1, 0) + m(0, 1);
  const LaurentPoly tq3 = m(1, 0) + m(0, 3);
  const LaurentPoly tq5 = m(1, 0) + m(0, 5);
  CHECK(tuple_genpoly(1, 2) == m(0, 4) * tq * tq * tq3);
  CHECK(tuple_genpoly(1, 3) == m(0, 16) * tq.pow(3) * tq3.pow(2) * tq5);
  CHECK(tuple_genpoly(2, 2) == stat_sum(brute_force(2, 2)));
}

TEST_CASE("closed product form") {
  CHECK(tuple_genpoly_closed(0, 1) == 1);
  CHECK(tuple_genpoly_closed(1, 1) == m(1, 0) + m(0, 1));
  for (int mm = 0; mm <= 1; ++mm)
    for (int n = 0; n <= 3; ++n) CHECK(tuple_genpoly(mm, n) == tuple_genpoly_closed(mm, n));
  CHECK_THROWS_AS(tuple_genpoly_closed(2, 1), DomainError);
}

TEST_CASE("weights and statistics") {
  const auto g = generic::coeffs();
  const auto cs = qnarayana_coeffs();
  for (const auto& t : enumerate_tuples(1, 2)) {
    const PathStats st = tuple_stats(t);
    CHECK(tuple_weight(t, cs) == m(st.level, st.area));
    LaurentPoly product = 1;
    for (const auto& p : t.paths) product *= path_weight(p, g);
    CHECK(tuple_weight(t, g) == product);
  }
}

TEST_CASE("determinants as signed tuple sums") {
  const auto g = generic::coeffs();
  const Report primal = tuple_det_check(g, 3, 2);
  REQUIRE(primal.size() == 1);
  CHECK(primal[0].check == "tuple_det");
  CHECK(primal[0].pass);
  const Report dual = tuple_det_check(g, -1, 2);
  REQUIRE(dual.size() == 1);
  CHECK(dual[0].check == "tuple_det_dual");
  CHECK(dual[0].pass);
  for (int n = 1; n <= 3; ++n)
    for (int s = n; s <= n + 2; ++s) CHECK(all_pass(tuple_det_check(qnarayana_coeffs(), s, n)));
  CHECK_THROWS_AS(tuple_det_check(g, 1, 2), DomainError);
}

TEST_CASE("tuple JSON") {
  const PathTuple t = enumerate_tuples(1, 1)[0];
  CHECK(to_json(t).dump() == R"({"m":1,"paths":[{"start":[0,0],"steps":"UD"}]})");
}
