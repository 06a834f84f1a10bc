#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "narayana_lab/coeffs.hpp"
#include "narayana_lab/json_io.hpp"
#include "narayana_lab/ring.hpp"

namespace nlab {

// Up = (1, 1), Down = (1, -1), Level = (2, 0). The enumerator order matches
// the canonical ordering of step sequences.
enum class Step : std::uint8_t { Up, Down, Level };

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// A Schroeder path stored in absolute lattice coordinates.
class SchroederPath {
 public:
  SchroederPath() = default;
  SchroederPath(LatticePoint start, std::vector<Step> steps, std::int64_t baseline = 0);

  const LatticePoint& start() const { return start_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::int64_t baseline() const { return baseline_; }

  LatticePoint endpoint() const;
  // Running height never drops below the baseline.
  bool valid() const;
  // Every lattice point the path touches, level-step midpoints included.
  std::vector<LatticePoint> occupied_points() const;

  friend auto operator<=>(const SchroederPath&, const SchroederPath&) = default;
  friend bool operator==(const SchroederPath&, const SchroederPath&) = default;

 private:
  LatticePoint start_{};
  std::vector<Step> steps_;
  std::int64_t baseline_ = 0;
};

char step_char(Step s);
std::string steps_string(const SchroederPath& p);
// Parses a "UDL" string; ParseError on any other character.
std::vector<Step> parse_steps(std::string_view text);

// All of S_k, lexicographic in the step sequence with Up < Down < Level.
// SizeLimitExceeded for k > limits::kMaxEnumeratedPathLength.
std::vector<SchroederPath> enumerate_paths(int k);

struct PathStats {
  std::int64_t level = 0;
  std::int64_t area = 0;
  std::int64_t length = 0;

  friend bool operator==(const PathStats&, const PathStats&) = default;
};

// level = #Level; area = sum over Down steps from height h of (2h - 1) plus
// sum over Level steps at height h of 2h, which is the region between the
// path and the x-axis; length = (#Up + #Down)/2 + #Level.
PathStats path_stats(const SchroederPath& p);

// Product of step labels: Up -> 1, Down from height n -> b_n, Level at
// height n -> c_n, heights absolute.
LaurentPoly path_weight(const SchroederPath& p, const CoefficientSeq& cs);

// Sum of path_weight over S_k, by a transfer recursion over the lattice
// rather than explicit enumeration.
LaurentPoly path_sum(int k, const CoefficientSeq& cs);

// {"start":[x,y],"steps":"UDL"}.
Json to_json(const SchroederPath& p);
SchroederPath path_from_json(const Json& j, std::int64_t baseline = 0);

}  // namespace nlab
