#include <doctest.h>

#include <map>

#include "narayana_lab/coeffs.hpp"
#include "narayana_lab/errors.hpp"
#include "narayana_lab/limits.hpp"
#include "narayana_lab/paths.hpp"

using namespace nlab;

namespace {

// Paths from (0,0) to (2k,0) above the axis, counted by a height DP over x.
long long schroeder_dp(int k) {
  std::map<std::pair<int, int>, long long> ways{{{0, 0}, 1}};
  for (int x = 0; x < 2 * k; ++x) {
    for (int y = 0; y <= 2 * k; ++y) {
      auto it = ways.find({x, y});
      if (it == ways.end()) continue;
      const long long w = it->second;
      ways[{x + 1, y + 1}] += w;
      if (y > 0) ways[{x + 1, y - 1}] += w;
      ways[{x + 2, y}] += w;
    }
  }
  return ways[{2 * k, 0}];
}

SchroederPath path(const char* steps) { return SchroederPath({0, 0}, parse_steps(steps)); }

}  // namespace

TEST_CASE("path counts") {
  CHECK(enumerate_paths(0).size() == 1);
  CHECK(enumerate_paths(0)[0].steps().empty());
  CHECK(enumerate_paths(2).size() == 6);
  CHECK(enumerate_paths(4).size() == 90);
  const long long large_schroeder[] = {1, 2, 6, 22, 90, 394, 1806, 8558, 41586};
  for (int k = 0; k <= 8; ++k) {
    CHECK(schroeder_dp(k) == large_schroeder[k]);
    CHECK(static_cast<long long>(enumerate_paths(k).size()) == schroeder_dp(k));
  }
  CHECK_THROWS_AS(enumerate_paths(limits::kMaxEnumeratedPathLength + 1), SizeLimitExceeded);
}

TEST_CASE("enumeration is ordered, valid and duplicate free") {
  const auto paths = enumerate_paths(5);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    CHECK(paths[i].valid());
    CHECK(paths[i].endpoint() == LatticePoint{10, 0});
    if (i > 0) CHECK(paths[i - 1].steps() < paths[i].steps());
  }
}

TEST_CASE("statistics") {
  CHECK(path_stats(path("L")) == PathStats{1, 0, 1});
  CHECK(path_stats(path("UD")) == PathStats{0, 1, 1});
  CHECK(path_stats(path("ULD")) == PathStats{1, 3, 2});
  CHECK(path_stats(path("UUDD")) == PathStats{0, 4, 2});
  CHECK(path_stats(SchroederPath{}) == PathStats{0, 0, 0});
}

TEST_CASE("area matches a trapezoid sum over the polyline") {
  for (const auto& p : enumerate_paths(6)) {
    // Twice the area under the polyline, summed step by step.
    std::int64_t twice = 0;
    std::int64_t y = 0;
    for (Step s : p.steps()) {
      if (s == Step::Up) twice += 2 * y + 1, ++y;
      else if (s == Step::Down) twice += 2 * y - 1, --y;
      else twice += 4 * y;
    }
    CHECK(twice == 2 * path_stats(p).area);
  }
}

TEST_CASE("weights with symbolic labels") {
  const auto g = generic::coeffs();
  CHECK(path_weight(path("L"), g) == generic::c(0));
  CHECK(path_weight(path("UD"), g) == generic::b(1));
  CHECK(path_weight(path("ULD"), g) == generic::b(1) * generic::c(1));
  CHECK(path_weight(path("UUDD"), g) == generic::b(1) * generic::b(2));
  CHECK(path_weight(SchroederPath({-1, 1}, parse_steps("L"), 1), g) == generic::c(1));
}

TEST_CASE("q-Narayana weight is t^level q^area") {
  const auto cs = qnarayana_coeffs();
  for (int k = 0; k <= 7; ++k) {
    for (const auto& p : enumerate_paths(k)) {
      const PathStats st = path_stats(p);
      CHECK(path_weight(p, cs) == LaurentPoly::monomial(st.level, st.area));
    }
  }
}

TEST_CASE("transfer sum equals enumeration") {
  const auto g = generic::coeffs();
  for (int k = 0; k <= 4; ++k) {
    LaurentPoly total;
    for (const auto& p : enumerate_paths(k)) total += path_weight(p, g);
    CHECK(path_sum(k, g) == total);
  }
  const auto r = random_rational_coeffs(7, 8);
  for (int k = 0; k <= 6; ++k) {
    LaurentPoly total;
    for (const auto& p : enumerate_paths(k)) total += path_weight(p, r);
    CHECK(path_sum(k, r) == total);
  }
}

TEST_CASE("step parsing and JSON") {
  CHECK(steps_string(path("UDL")) == "UDL");
  CHECK_THROWS_AS(parse_steps("UX"), ParseError);
  const SchroederPath p({-2, 2}, parse_steps("ULD"), 2);
  CHECK(to_json(p).dump() == R"({"start":[-2,2],"steps":"ULD"})");
  CHECK(path_from_json(to_json(p), 2) == p);
  CHECK_FALSE(SchroederPath({0, 0}, parse_steps("DU")).valid());
}
