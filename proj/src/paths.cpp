#include "narayana_lab/paths.hpp"

#include <map>

#include "narayana_lab/errors.hpp"
#include "narayana_lab/limits.hpp"

namespace nlab {

SchroederPath::SchroederPath(LatticePoint start, std::vector<Step> steps, std::int64_t baseline)
    : start_(start), steps_(std::move(steps)), baseline_(baseline) {}

LatticePoint SchroederPath::endpoint() const {
  LatticePoint p = start_;
  for (Step s : steps_) {
    switch (s) {
      case Step::Up:
        p.x += 1;
        p.y += 1;
        break;
      case Step::Down:
        p.x += 1;
        p.y -= 1;
        break;
      case Step::Level:
        p.x += 2;
        break;
    }
  }
  return p;
}

bool SchroederPath::valid() const {
  std::int64_t h = start_.y;
  if (h < baseline_) return false;
  for (Step s : steps_) {
    if (s == Step::Up) ++h;
    if (s == Step::Down) --h;
    if (h < baseline_) return false;
  }
  return true;
}

std::vector<LatticePoint> SchroederPath::occupied_points() const {
  std::vector<LatticePoint> pts{start_};
  LatticePoint p = start_;
  for (Step s : steps_) {
    switch (s) {
      case Step::Up:
        p = {p.x + 1, p.y + 1};
        break;
      case Step::Down:
        p = {p.x + 1, p.y - 1};
        break;
      case Step::Level:
        pts.push_back({p.x + 1, p.y});
        p = {p.x + 2, p.y};
        break;
    }
    pts.push_back(p);
  }
  return pts;
}

char step_char(Step s) {
  switch (s) {
    case Step::Up:
      return 'U';
    case Step::Down:
      return 'D';
    case Step::Level:
      return 'L';
  }
  return '?';
}

std::string steps_string(const SchroederPath& p) {
  std::string s;
  s.reserve(p.steps().size());
  for (Step step : p.steps()) s.push_back(step_char(step));
  return s;
}

std::vector<Step> parse_steps(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'U':
        steps.push_back(Step::Up);
        break;
      case 'D':
        steps.push_back(Step::Down);
        break;
      case 'L':
        steps.push_back(Step::Level);
        break;
      default:
        throw ParseError(std::string("invalid step character '") + ch + "'");
    }
  }
  return steps;
}

namespace {

void extend(int width, std::int64_t x, std::int64_t h, std::vector<Step>& prefix,
            std::vector<SchroederPath>& out) {
  if (x == width) {
    if (h == 0) out.emplace_back(LatticePoint{0, 0}, prefix, 0);
    return;
  }
  const std::int64_t remaining = width - x;
  if (h + 1 <= remaining - 1) {
    prefix.push_back(Step::Up);
    extend(width, x + 1, h + 1, prefix, out);
    prefix.pop_back();
  }
  if (h >= 1) {
    prefix.push_back(Step::Down);
    extend(width, x + 1, h - 1, prefix, out);
    prefix.pop_back();
  }
  if (remaining >= 2 && h <= remaining - 2) {
    prefix.push_back(Step::Level);
    extend(width, x + 2, h, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SchroederPath> enumerate_paths(int k) {
  if (k < 0) throw DomainError("enumerate_paths needs k >= 0");
  if (k > limits::kMaxEnumeratedPathLength) {
    throw SizeLimitExceeded("enumerate_paths: k = " + std::to_string(k) + " exceeds the enumeration limit " +
                            std::to_string(limits::kMaxEnumeratedPathLength));
  }
  std::vector<SchroederPath> out;
  std::vector<Step> prefix;
  extend(2 * k, 0, 0, prefix, out);
  return out;
}

PathStats path_stats(const SchroederPath& p) {
  PathStats st;
  std::int64_t h = p.start().y;
  std::int64_t diagonal = 0;
  for (Step s : p.steps()) {
    switch (s) {
      case Step::Up:
        ++h;
        ++diagonal;
        break;
      case Step::Down:
        st.area += 2 * h - 1;
        --h;
        ++diagonal;
        break;
      case Step::Level:
        st.area += 2 * h;
        ++st.level;
        break;
    }
  }
  if (diagonal % 2 != 0) throw DomainError("path_stats needs a path that returns to its starting height");
  st.length = diagonal / 2 + st.level;
  return st;
}

LaurentPoly path_weight(const SchroederPath& p, const CoefficientSeq& cs) {
  LaurentPoly w = 1;
  std::int64_t h = p.start().y;
  for (Step s : p.steps()) {
    switch (s) {
      case Step::Up:
        ++h;
        break;
      case Step::Down:
        if (h < 1) throw UndefinedCoefficient("down step from height " + std::to_string(h) + " has no label");
        w *= cs.b(static_cast<int>(h));
        --h;
        break;
      case Step::Level:
        w *= cs.c(static_cast<int>(h));
        break;
    }
  }
  return w;
}

LaurentPoly path_sum(int k, const CoefficientSeq& cs) {
  if (k < 0) throw DomainError("path_sum needs k >= 0");
  if (k > limits::kMaxMomentIndex) {
    throw SizeLimitExceeded("path_sum: k = " + std::to_string(k) + " exceeds the limit " +
                            std::to_string(limits::kMaxMomentIndex));
  }
  const int width = 2 * k;
  const int max_h = k;
  std::vector<LaurentPoly> b(static_cast<std::size_t>(max_h) + 1);
  std::vector<LaurentPoly> c(static_cast<std::size_t>(max_h) + 1);
  for (int h = 0; h <= max_h; ++h) {
    if (h >= 1 && h <= k) b[static_cast<std::size_t>(h)] = cs.b(h);
    if (h <= k - 1) c[static_cast<std::size_t>(h)] = cs.c(h);
  }
  // sums[x][h]: weighted count of partial paths from (0,0) to (x,h).
  std::vector<std::vector<LaurentPoly>> sums(static_cast<std::size_t>(width) + 1,
                                             std::vector<LaurentPoly>(static_cast<std::size_t>(max_h) + 2));
  sums[0][0] = 1;
  for (int x = 0; x < width; ++x) {
    for (int h = 0; h <= max_h; ++h) {
      const LaurentPoly& cur = sums[static_cast<std::size_t>(x)][static_cast<std::size_t>(h)];
      if (cur.is_zero()) continue;
      const int remaining = width - x;
      if (h + 1 <= remaining - 1) sums[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(h + 1)] += cur;
      if (h >= 1) {
        sums[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(h - 1)] += cur * b[static_cast<std::size_t>(h)];
      }
      if (remaining >= 2 && h <= remaining - 2) {
        sums[static_cast<std::size_t>(x + 2)][static_cast<std::size_t>(h)] += cur * c[static_cast<std::size_t>(h)];
      }
    }
  }
  return sums[static_cast<std::size_t>(width)][0];
}

Json to_json(const SchroederPath& p) {
  Json out;
  out["start"] = Json::array({p.start().x, p.start().y});
  out["steps"] = steps_string(p);
  return out;
}

SchroederPath path_from_json(const Json& j, std::int64_t baseline) {
  if (!j.is_object() || !j.contains("start") || !j.contains("steps") || !j["start"].is_array() ||
      j["start"].size() != 2 || !j["steps"].is_string()) {
    throw ParseError("path JSON must be {\"start\":[x,y],\"steps\":\"UDL...\"}");
  }
  const LatticePoint start{j["start"][0].get<std::int64_t>(), j["start"][1].get<std::int64_t>()};
  return {start, parse_steps(j["steps"].get<std::string>()), baseline};
}

}  // namespace nlab
