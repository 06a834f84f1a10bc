#pragma once

#include <string>
#include <vector>

#include "narayana_lab/json_io.hpp"
#include "narayana_lab/report.hpp"

namespace nlab {

struct VerifyItem {
  std::string name;
  bool optional = false;
  bool ran = false;
  Report checks;
  std::string error;  // set when the item threw
  std::string note;   // informational, never affects pass/fail

  bool pass() const { return !ran || (error.empty() && all_pass(checks)); }
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<VerifyItem> items;

  bool pass() const;
  std::size_t check_count() const;
};

struct VerifyOptions {
  // Optional items (larger orders) run only when this is set.
  bool include_optional = true;
  // 0 means the NARAYANA_LAB_THREADS environment variable, else the
  // hardware concurrency.
  unsigned threads = 0;
};

// Worker count from NARAYANA_LAB_THREADS, capped at the hardware concurrency.
unsigned default_threads();

// The acceptance suite, criteria in numeric order. Independent criteria run
// concurrently; the result does not depend on the thread count.
std::vector<Criterion> run_acceptance(const VerifyOptions& opts = {});

// "PASS  3  Orthogonality and Pade  (6 items, 412 checks)" plus indented
// detail lines for failures, skipped optional items and notes.
std::string format_criterion(const Criterion& c);
Json to_json(const std::vector<Criterion>& results);

}  // namespace nlab
