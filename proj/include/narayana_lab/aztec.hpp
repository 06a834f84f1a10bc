#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "narayana_lab/nipaths.hpp"
#include "narayana_lab/report.hpp"
#include "narayana_lab/ring.hpp"

namespace nlab {

// A unit square named by its lower-left corner.
struct Cell {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class RegionKind { aztec, aztec_cut2 };

/// AD_n, or AD_(n+1) without the two cells of its lowest row.
///
/// Cheap to copy; the cell data is shared.
class Region {
 public:
  RegionKind kind() const { return kind_; }
  int n() const { return n_; }
  // Aztec order of the enclosing diamond: n, or n + 1 for the cut variant.
  int order() const { return kind_ == RegionKind::aztec ? n_ : n_ + 1; }
  // Horizontal length parameter m of the matching tuples S_(m,n).
  int tuple_m() const { return kind_ == RegionKind::aztec ? 1 : 2; }

  // Sorted lexicographically by (i, j).
  const std::vector<Cell>& cells() const { return data_->cells; }
  std::size_t size() const { return data_->cells.size(); }
  bool contains(Cell c) const { return index_of(c) >= 0; }
  // Position in cells(), or -1.
  int index_of(Cell c) const;

  friend Region build_region(RegionKind kind, int n);

 private:
  struct Data {
    std::vector<Cell> cells;
    int lo = 0;
    int span = 0;
    std::vector<int> index;  // span x span grid, -1 outside
  };
  RegionKind kind_ = RegionKind::aztec;
  int n_ = 0;
  std::shared_ptr<const Data> data_;
};

Region build_region(RegionKind kind, int n);

// White iff i + j + order is even, which makes the upper-left border white.
bool is_white(const Region& region, Cell c);

struct Domino {
  Cell first;   // left cell, or lower cell
  Cell second;  // right cell, or upper cell
  bool vertical = false;
  // Horizontal: left cell white. Vertical: upper cell white.
  bool even = false;

  friend auto operator<=>(const Domino&, const Domino&) = default;
  friend bool operator==(const Domino&, const Domino&) = default;
};

/// Exact cover of a region by dominoes, stored as each cell's partner
/// direction. The direction string doubles as a canonical key.
class Tiling {
 public:
  enum Dir : char { right = 'R', left = 'L', up = 'U', down = 'D' };

  Tiling(Region region, std::string dirs);

  const Region& region() const { return region_; }
  const std::string& key() const { return dirs_; }
  std::vector<Domino> dominoes() const;
  int vertical_count() const;

  friend bool operator==(const Tiling& a, const Tiling& b) { return a.dirs_ == b.dirs_; }

 private:
  Region region_;
  std::string dirs_;
};

// Every tiling, filling the lexicographically least uncovered cell first.
// SizeLimitExceeded when the enclosing order exceeds limits::kMaxAztecOrder.
std::vector<Tiling> enumerate_tilings(const Region& region);

// The unique tiling by horizontal dominoes only, for AD_n.
Tiling all_horizontal(const Region& region);

// Tilings reachable by one elementary move (rotation of a 2x2 block covered
// by two parallel dominoes).
std::vector<Tiling> elementary_moves(const Tiling& t);

// Half the number of vertical dominoes. InvariantViolation if the count is odd.
int v_stat(const Tiling& t);

// Distance from the nearest all-horizontal tiling in the move graph, aligned
// with `tilings`. InvariantViolation when some tiling is unreachable.
std::vector<int> rank_bfs(const std::vector<Tiling>& tilings);

// Even vertical -> Up, odd vertical -> Down, odd horizontal -> Level, the
// steps joined into members starting at (-k, k).
PathTuple tiling_to_paths(const Tiling& t);
Tiling paths_to_tiling(const PathTuple& tuple, const Region& region);

// Sum of t^v q^r over all tilings of the region.
LaurentPoly tiling_genpoly(const Region& region);
LaurentPoly ad_poly(int n);

// prod_(k=0..n-1) (1 + t q^(2k+1))^(n-k).
LaurentPoly adt_formula(int n);
// adt_formula(n) * sum_(l=0..n) t^l q^(l^2) [n+1, l]_(q^2).
LaurentPoly variant_formula(int n);

// v = n(n+1)/2 - level and r = area - 2n(n+1)(n-1)/3 on every tiling of AD_n,
// plus the constant half-step total and the area of the all-level tuple.
Report tiling_stats_check(int n);

// Round trip on every tiling, validity of each image, and agreement of the
// image set with S_(m,n).
Report bijection_check(const Region& region);

// Border cells j - i = order, i <= -1, j >= 0 are white; neighbours differ.
Report coloring_check(const Region& region);

Json to_json(const Tiling& t);

}  // namespace nlab
