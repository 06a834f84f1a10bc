#pragma once

#include <string>
#include <vector>

#include "narayana_lab/json_io.hpp"
#include "narayana_lab/ring.hpp"

namespace nlab {

// One verified identity. lhs is the computed side, rhs the expected side.
struct CheckEntry {
  std::string check;
  int n = 0;
  int k = 0;
  bool pass = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

using Report = std::vector<CheckEntry>;

inline CheckEntry make_check(std::string name, int n, int k, LaurentPoly lhs, LaurentPoly rhs) {
  const bool pass = lhs == rhs;
  return {std::move(name), n, k, pass, std::move(lhs), std::move(rhs)};
}

bool all_pass(const Report& r);
std::size_t failure_count(const Report& r);

// [{"check":name,"n":..,"k":..,"pass":bool,"lhs":poly,"rhs":poly}, ...]
Json to_json(const Report& r);

void append(Report& into, const Report& from);

}  // namespace nlab
