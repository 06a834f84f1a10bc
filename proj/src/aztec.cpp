#include "narayana_lab/aztec.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "narayana_lab/dets.hpp"
#include "narayana_lab/errors.hpp"
#include "narayana_lab/limits.hpp"

namespace nlab {

namespace {

bool in_diamond(int order, int i, int j) {
  const int di = std::max(std::abs(i), std::abs(i + 1));
  const int dj = std::max(std::abs(j), std::abs(j + 1));
  return di + dj <= order + 1;
}

Cell partner(Cell c, char d) {
  switch (d) {
    case Tiling::right: return {c.i + 1, c.j};
    case Tiling::left: return {c.i - 1, c.j};
    case Tiling::up: return {c.i, c.j + 1};
    default: return {c.i, c.j - 1};
  }
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

int Region::index_of(Cell c) const {
  const int x = c.i - data_->lo;
  const int y = c.j - data_->lo;
  if (x < 0 || y < 0 || x >= data_->span || y >= data_->span) return -1;
  return data_->index[static_cast<std::size_t>(x * data_->span + y)];
}

Region build_region(RegionKind kind, int n) {
  if (n < 0) throw DomainError("region order must be nonnegative");
  Region r;
  r.kind_ = kind;
  r.n_ = n;
  const int order = r.order();
  auto data = std::make_shared<Region::Data>();
  data->lo = -order;
  data->span = std::max(2 * order, 1);
  data->index.assign(static_cast<std::size_t>(data->span * data->span), -1);
  for (int i = -order; i < order; ++i) {
    for (int j = -order; j < order; ++j) {
      if (!in_diamond(order, i, j)) continue;
      if (kind == RegionKind::aztec_cut2 && j == -order) continue;
      data->index[static_cast<std::size_t>((i - data->lo) * data->span + (j - data->lo))] =
          static_cast<int>(data->cells.size());
      data->cells.push_back({i, j});
    }
  }
  r.data_ = std::move(data);
  return r;
}

bool is_white(const Region& region, Cell c) { return (c.i + c.j + region.order()) % 2 == 0; }

Tiling::Tiling(Region region, std::string dirs) : region_(std::move(region)), dirs_(std::move(dirs)) {
  if (dirs_.size() != region_.size()) throw InvariantViolation("tiling does not match its region");
}

std::vector<Domino> Tiling::dominoes() const {
  std::vector<Domino> out;
  const auto& cells = region_.cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const char d = dirs_[k];
    if (d != right && d != up) continue;
    const Cell a = cells[k];
    const Cell b = partner(a, d);
    const bool vertical = d == up;
    out.push_back({a, b, vertical, is_white(region_, vertical ? b : a)});
  }
  return out;
}

int Tiling::vertical_count() const {
  return static_cast<int>(std::count(dirs_.begin(), dirs_.end(), up));
}

std::vector<Tiling> enumerate_tilings(const Region& region) {
  if (region.order() > limits::kMaxAztecOrder) {
    throw SizeLimitExceeded("tiling enumeration is limited to order " + str(limits::kMaxAztecOrder));
  }
  std::vector<Tiling> out;
  const auto& cells = region.cells();
  std::string dirs(cells.size(), '.');
  // Cells are sorted by (i, j), so the least uncovered cell always pairs to
  // the right or upward.
  auto fill = [&](auto&& self, std::size_t from) -> void {
    while (from < cells.size() && dirs[from] != '.') ++from;
    if (from == cells.size()) {
      out.emplace_back(region, dirs);
      return;
    }
    const Cell c = cells[from];
    for (const char d : {Tiling::right, Tiling::up}) {
      const int other = region.index_of(partner(c, d));
      if (other < 0 || dirs[static_cast<std::size_t>(other)] != '.') continue;
      dirs[from] = d;
      dirs[static_cast<std::size_t>(other)] = d == Tiling::right ? Tiling::left : Tiling::down;
      self(self, from + 1);
      dirs[from] = '.';
      dirs[static_cast<std::size_t>(other)] = '.';
    }
  };
  fill(fill, 0);
  return out;
}

Tiling all_horizontal(const Region& region) {
  std::string dirs(region.size(), '.');
  const auto& cells = region.cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (dirs[k] != '.') continue;
    const int other = region.index_of({cells[k].i + 1, cells[k].j});
    if (other < 0 || dirs[static_cast<std::size_t>(other)] != '.') {
      throw DomainError("region has no all-horizontal tiling");
    }
    dirs[k] = Tiling::right;
    dirs[static_cast<std::size_t>(other)] = Tiling::left;
  }
  return {region, dirs};
}

std::vector<Tiling> elementary_moves(const Tiling& t) {
  const Region& region = t.region();
  const std::string& dirs = t.key();
  std::vector<Tiling> out;
  for (const Cell c : region.cells()) {
    const int a = region.index_of(c);
    const int b = region.index_of({c.i + 1, c.j});
    const int u = region.index_of({c.i, c.j + 1});
    const int v = region.index_of({c.i + 1, c.j + 1});
    if (b < 0 || u < 0 || v < 0) continue;
    const auto at = [&dirs](int k) { return dirs[static_cast<std::size_t>(k)]; };
    std::string next = dirs;
    const auto put = [&next](int k, char d) { next[static_cast<std::size_t>(k)] = d; };
    if (at(a) == Tiling::right && at(u) == Tiling::right) {
      put(a, Tiling::up), put(u, Tiling::down), put(b, Tiling::up), put(v, Tiling::down);
    } else if (at(a) == Tiling::up && at(b) == Tiling::up) {
      put(a, Tiling::right), put(b, Tiling::left), put(u, Tiling::right), put(v, Tiling::left);
    } else {
      continue;
    }
    out.emplace_back(region, std::move(next));
  }
  return out;
}

int v_stat(const Tiling& t) {
  const int v = t.vertical_count();
  if (v % 2 != 0) throw InvariantViolation("odd number of vertical dominoes: " + str(v));
  return v / 2;
}

std::vector<int> rank_bfs(const std::vector<Tiling>& tilings) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(tilings.size());
  for (std::size_t k = 0; k < tilings.size(); ++k) index.emplace(tilings[k].key(), k);
  std::vector<int> rank(tilings.size(), -1);
  std::deque<std::size_t> frontier;
  for (std::size_t k = 0; k < tilings.size(); ++k) {
    if (tilings[k].vertical_count() == 0) {
      rank[k] = 0;
      frontier.push_back(k);
    }
  }
  while (!frontier.empty()) {
    const std::size_t k = frontier.front();
    frontier.pop_front();
    for (const auto& next : elementary_moves(tilings[k])) {
      const auto it = index.find(next.key());
      if (it == index.end()) throw InvariantViolation("elementary move left the enumerated tiling set");
      if (rank[it->second] >= 0) continue;
      rank[it->second] = rank[k] + 1;
      frontier.push_back(it->second);
    }
  }
  if (std::find(rank.begin(), rank.end(), -1) != rank.end()) {
    throw InvariantViolation("move graph is disconnected");
  }
  return rank;
}

PathTuple tiling_to_paths(const Tiling& t) {
  const Region& region = t.region();
  const int m = region.tuple_m();
  const int n = region.n();
  std::map<LatticePoint, Step> steps;
  for (const Domino& d : t.dominoes()) {
    if (!d.vertical && d.even) continue;
    LatticePoint from;
    Step s;
    if (!d.vertical) {
      from = {d.first.i + m, d.first.j + n};
      s = Step::Level;
    } else if (d.even) {
      from = {d.first.i + m, d.first.j + n};
      s = Step::Up;
    } else {
      from = {d.first.i + m, d.second.j + n};
      s = Step::Down;
    }
    if (!steps.emplace(from, s).second) throw InvariantViolation("two steps leave the same lattice point");
  }
  PathTuple tuple{m, {}};
  std::size_t used = 0;
  for (int k = 0; k < n; ++k) {
    const LatticePoint start{-k, k};
    LatticePoint at = start;
    std::vector<Step> seq;
    while (at.x < 2 * m + k) {
      const auto it = steps.find(at);
      if (it == steps.end()) {
        throw InvariantViolation("path " + str(k) + " breaks off at (" + str(at.x) + ", " + str(at.y) + ")");
      }
      seq.push_back(it->second);
      ++used;
      switch (it->second) {
        case Step::Up: at = {at.x + 1, at.y + 1}; break;
        case Step::Down: at = {at.x + 1, at.y - 1}; break;
        case Step::Level: at = {at.x + 2, at.y}; break;
      }
    }
    if (at != LatticePoint{2 * m + k, k}) throw InvariantViolation("path " + str(k) + " misses its endpoint");
    tuple.paths.emplace_back(start, std::move(seq), k);
  }
  if (used != steps.size()) throw InvariantViolation("tiling carries steps outside the path tuple");
  return tuple;
}

Tiling paths_to_tiling(const PathTuple& tuple, const Region& region) {
  const int m = region.tuple_m();
  const int n = region.n();
  if (tuple.m != m || static_cast<int>(tuple.paths.size()) != n) {
    throw InvariantViolation("tuple shape does not match the region");
  }
  std::string dirs(region.size(), '.');
  auto place = [&](Cell a, Cell b, bool vertical) {
    const int ia = region.index_of(a);
    const int ib = region.index_of(b);
    if (ia < 0 || ib < 0 || dirs[static_cast<std::size_t>(ia)] != '.' || dirs[static_cast<std::size_t>(ib)] != '.') {
      throw InvariantViolation("tuple does not correspond to a tiling");
    }
    dirs[static_cast<std::size_t>(ia)] = vertical ? Tiling::up : Tiling::right;
    dirs[static_cast<std::size_t>(ib)] = vertical ? Tiling::down : Tiling::left;
  };
  for (const auto& p : tuple.paths) {
    auto x = static_cast<int>(p.start().x);
    auto y = static_cast<int>(p.start().y);
    for (const Step s : p.steps()) {
      const int i = x - m;
      const int j = y - n;
      switch (s) {
        case Step::Up: place({i, j}, {i, j + 1}, true), ++x, ++y; break;
        case Step::Down: place({i, j - 1}, {i, j}, true), ++x, --y; break;
        case Step::Level: place({i, j}, {i + 1, j}, false), x += 2; break;
      }
    }
  }
  const auto& cells = region.cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (dirs[k] != '.' || !is_white(region, cells[k])) continue;
    place(cells[k], {cells[k].i + 1, cells[k].j}, false);
  }
  if (dirs.find('.') != std::string::npos) throw InvariantViolation("tuple leaves cells uncovered");
  return {region, std::move(dirs)};
}

LaurentPoly tiling_genpoly(const Region& region) {
  const auto tilings = enumerate_tilings(region);
  const auto ranks = rank_bfs(tilings);
  std::map<Monomial, long> counts;
  for (std::size_t k = 0; k < tilings.size(); ++k) ++counts[{v_stat(tilings[k]), ranks[k]}];
  std::vector<Term> terms;
  for (const auto& [mono, c] : counts) terms.push_back({mono, Rational(c)});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly ad_poly(int n) { return tiling_genpoly(build_region(RegionKind::aztec, n)); }

LaurentPoly adt_formula(int n) {
  if (n < 0) throw DomainError("adt_formula needs n >= 0");
  LaurentPoly out = 1;
  for (int k = 0; k < n; ++k) {
    out *= (LaurentPoly(1) + LaurentPoly::monomial(1, 2 * k + 1)).pow(static_cast<unsigned>(n - k));
  }
  return out;
}

LaurentPoly variant_formula(int n) {
  if (n < 0) throw DomainError("variant_formula needs n >= 0");
  LaurentPoly sum;
  for (int l = 0; l <= n; ++l) {
    sum += LaurentPoly::monomial(l, static_cast<Exponent>(l) * l) * lp_subst_power(qbinom(n + 1, l), Var::q, 2);
  }
  return adt_formula(n) * sum;
}

Report tiling_stats_check(int n) {
  const Region region = build_region(RegionKind::aztec, n);
  const auto tilings = enumerate_tilings(region);
  const auto ranks = rank_bfs(tilings);
  const long half_steps = static_cast<long>(n) * (n + 1) / 2;
  const long base_area = 2L * n * (n + 1) * (n - 1) / 3;
  Report report;
  for (std::size_t k = 0; k < tilings.size(); ++k) {
    const PathStats st = tuple_stats(tiling_to_paths(tilings[k]));
    const int idx = static_cast<int>(k);
    report.push_back(make_check("tiling_vertical_level", n, idx, v_stat(tilings[k]), half_steps - st.level));
    report.push_back(make_check("tiling_rank_area", n, idx, ranks[k], st.area - base_area));
    report.push_back(make_check("tiling_half_steps", n, idx, st.length, half_steps));
  }
  const PathStats flat = tuple_stats(tiling_to_paths(all_horizontal(region)));
  report.push_back(make_check("tiling_base_area", n, 0, flat.area, base_area));
  return report;
}

Report bijection_check(const Region& region) {
  const auto tilings = enumerate_tilings(region);
  std::set<PathTuple> images;
  Report report;
  for (std::size_t k = 0; k < tilings.size(); ++k) {
    const PathTuple tuple = tiling_to_paths(tilings[k]);
    const bool back = paths_to_tiling(tuple, region) == tilings[k];
    const bool ok = back && tuple_valid(tuple);
    images.insert(tuple);
    report.push_back({"bijection_roundtrip", region.n(), static_cast<int>(k), ok, ok ? 1 : 0, 1});
  }
  const auto tuples = enumerate_tuples(region.tuple_m(), region.n());
  const std::set<PathTuple> expected(tuples.begin(), tuples.end());
  report.push_back(make_check("bijection_injective", region.n(), 0, static_cast<long>(images.size()),
                              static_cast<long>(tilings.size())));
  CheckEntry onto = make_check("bijection_onto", region.n(), 0, static_cast<long>(images.size()),
                               static_cast<long>(expected.size()));
  onto.pass = onto.pass && images == expected;
  report.push_back(std::move(onto));
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const bool ok = tiling_to_paths(paths_to_tiling(tuples[k], region)) == tuples[k];
    report.push_back({"bijection_inverse", region.n(), static_cast<int>(k), ok, ok ? 1 : 0, 1});
  }
  return report;
}

Report coloring_check(const Region& region) {
  Report report;
  const int order = region.order();
  int border = 0;
  for (int i = -order; i <= -1; ++i) {
    const Cell c{i, order + i};
    if (!region.contains(c)) continue;
    ++border;
    report.push_back(make_check("coloring_border_white", region.n(), i, is_white(region, c) ? 1 : 0, 1));
  }
  report.push_back(make_check("coloring_border_size", region.n(), 0, border, order));
  long clashes = 0;
  for (const Cell c : region.cells()) {
    for (const Cell d : {Cell{c.i + 1, c.j}, Cell{c.i, c.j + 1}}) {
      if (region.contains(d) && is_white(region, c) == is_white(region, d)) ++clashes;
    }
  }
  report.push_back(make_check("coloring_proper", region.n(), 0, clashes, 0));
  return report;
}

Json to_json(const Tiling& t) {
  Json out;
  out["kind"] = t.region().kind() == RegionKind::aztec ? "aztec" : "aztec_cut2";
  out["n"] = t.region().n();
  out["dominoes"] = Json::array();
  for (const Domino& d : t.dominoes()) {
    out["dominoes"].push_back({{"cells", {{d.first.i, d.first.j}, {d.second.i, d.second.j}}},
                               {"orientation", d.vertical ? "vertical" : "horizontal"},
                               {"parity", d.even ? "even" : "odd"}});
  }
  return out;
}

}  // namespace nlab
