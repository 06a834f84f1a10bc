#include "narayana_lab/svg.hpp"

#include <algorithm>
#include <limits>
#include <iterator>
#include <sstream>
#include <utility>
#include <vector>

namespace nlab {

namespace {

// Coordinates are kept in half lattice units so every drawn point is an
// integer; one half unit is 10px.
constexpr long kHalf = 10;
constexpr long kMargin = 20;

const char* const kPathColors[] = {"#1b6ca8", "#c0392b", "#27864a", "#8e44ad", "#d68910", "#17202a"};

struct Box {
  long x0 = std::numeric_limits<long>::max();
  long y0 = std::numeric_limits<long>::max();
  long x1 = std::numeric_limits<long>::lowest();
  long y1 = std::numeric_limits<long>::lowest();

  void add(long x, long y) {
    x0 = std::min(x0, x), y0 = std::min(y0, y);
    x1 = std::max(x1, x), y1 = std::max(y1, y);
  }
};

class Canvas {
 public:
  explicit Canvas(Box box) : box_(box) {
    if (box_.x0 > box_.x1) box_ = {0, 0, 0, 0};
  }

  long px(long hx) const { return kMargin + (hx - box_.x0) * kHalf; }
  long py(long hy) const { return kMargin + (box_.y1 - hy) * kHalf; }

  std::ostringstream& body() { return body_; }

  std::string finish() const {
    const long w = (box_.x1 - box_.x0) * kHalf + 2 * kMargin;
    const long h = (box_.y1 - box_.y0) * kHalf + 2 * kMargin;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  Box box_;
  std::ostringstream body_;
};

// Vertices of a path in half units, lifted by `lift` half units.
std::vector<std::pair<long, long>> half_points(const SchroederPath& p, long lift) {
  std::vector<std::pair<long, long>> pts{{2 * p.start().x, 2 * p.start().y + lift}};
  for (const Step s : p.steps()) {
    auto [x, y] = pts.back();
    switch (s) {
      case Step::Up: pts.emplace_back(x + 2, y + 2); break;
      case Step::Down: pts.emplace_back(x + 2, y - 2); break;
      case Step::Level: pts.emplace_back(x + 4, y); break;
    }
  }
  return pts;
}

void draw_axis(Canvas& c, const Box& box) {
  c.body() << "<line x1=\"" << c.px(box.x0) << "\" y1=\"" << c.py(0) << "\" x2=\"" << c.px(box.x1) << "\" y2=\""
           << c.py(0) << "\" stroke=\"#aaaaaa\" stroke-dasharray=\"4 3\"/>\n";
}

void draw_polyline(Canvas& c, const std::vector<std::pair<long, long>>& pts, const char* color, int width) {
  c.body() << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width << "\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    c.body() << (k ? " " : "") << c.px(pts[k].first) << ',' << c.py(pts[k].second);
  }
  c.body() << "\"/>\n";
}

void draw_path(Canvas& c, const SchroederPath& p, const char* color) {
  const auto pts = half_points(p, 0);
  draw_polyline(c, pts, color, 3);
  for (const auto& [x, y] : pts) {
    c.body() << "<circle cx=\"" << c.px(x) << "\" cy=\"" << c.py(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  }
}

Box path_box(const std::vector<SchroederPath>& paths) {
  Box box;
  box.add(0, 0);
  for (const auto& p : paths) {
    for (const auto& pt : p.occupied_points()) box.add(2 * pt.x, 2 * pt.y);
  }
  return box;
}

}  // namespace

std::string render_paths_svg(const std::vector<SchroederPath>& paths) {
  const Box box = path_box(paths);
  Canvas c(box);
  draw_axis(c, box);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    draw_path(c, paths[k], kPathColors[k % std::size(kPathColors)]);
  }
  return c.finish();
}

std::string render_tuple_svg(const PathTuple& tuple) { return render_paths_svg(tuple.paths); }

std::string render_tiling_svg(const Tiling& tiling, bool overlay) {
  const Region& region = tiling.region();
  const int m = region.tuple_m();
  const int n = region.n();
  // Cells are drawn in path coordinates, shifted by (m, n), so the overlay
  // needs no second transform.
  Box box;
  for (const Cell cell : region.cells()) {
    box.add(2 * (cell.i + m), 2 * (cell.j + n));
    box.add(2 * (cell.i + m + 1), 2 * (cell.j + n + 1));
  }
  Canvas c(box);
  for (const Domino& d : tiling.dominoes()) {
    const long x = 2 * (d.first.i + m);
    const long y = 2 * (d.first.j + n);
    const long w = d.vertical ? 2 : 4;
    const long h = d.vertical ? 4 : 2;
    const char* fill = d.vertical ? (d.even ? "#f5b7b1" : "#f9e79f") : (d.even ? "#d6eaf8" : "#abebc6");
    const char* cls = d.vertical ? (d.even ? "vertical-even" : "vertical-odd")
                                 : (d.even ? "horizontal-even" : "horizontal-odd");
    c.body() << "<rect class=\"" << cls << "\" x=\"" << c.px(x) << "\" y=\"" << c.py(y + h) << "\" width=\""
             << w * kHalf << "\" height=\"" << h * kHalf << "\" fill=\"" << fill
             << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  if (overlay) {
    // Lifting lattice points by half a unit puts every step's midpoint on
    // its domino's centre.
    const PathTuple tuple = tiling_to_paths(tiling);
    for (std::size_t k = 0; k < tuple.paths.size(); ++k) {
      draw_polyline(c, half_points(tuple.paths[k], 1), kPathColors[k % std::size(kPathColors)], 2);
    }
  }
  return c.finish();
}

}  // namespace nlab
