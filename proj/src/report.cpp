#include "narayana_lab/report.hpp"

#include <algorithm>

namespace nlab {

bool all_pass(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckEntry& e) { return e.pass; });
}

std::size_t failure_count(const Report& r) {
  return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](const CheckEntry& e) { return !e.pass; }));
}

Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& e : r) {
    Json entry;
    entry["check"] = e.check;
    entry["n"] = e.n;
    entry["k"] = e.k;
    entry["pass"] = e.pass;
    entry["lhs"] = to_json(e.lhs);
    entry["rhs"] = to_json(e.rhs);
    out.push_back(std::move(entry));
  }
  return out;
}

void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

}  // namespace nlab
