#include "narayana_lab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <string>

#include "narayana_lab/aztec.hpp"
#include "narayana_lab/dets.hpp"
#include "narayana_lab/errors.hpp"
#include "narayana_lab/lbp.hpp"
#include "narayana_lab/nipaths.hpp"
#include "narayana_lab/paths.hpp"
#include "narayana_lab/qnarayana.hpp"
#include "narayana_lab/svg.hpp"
#include "narayana_lab/verify.hpp"

namespace nlab::cli {

namespace {

constexpr const char* kNegativeConvention = "N_m = t^(2m+1) N_(-m-1)(t, 1/q) for m <= -1, so that N_m = f_(m+1) at kappa = 1";

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw ParseError("failed writing " + path);
}

void print_report_text(std::ostream& out, const Report& r) {
  for (const auto& e : r) {
    out << (e.pass ? "  ok    " : "  FAIL  ") << e.check << " n=" << e.n << " k=" << e.k;
    if (!e.pass) out << "  lhs=" << to_string(e.lhs) << "  rhs=" << to_string(e.rhs);
    out << "\n";
  }
}

int report_exit(const Report& r) { return all_pass(r) ? kExitOk : kExitCheckFailed; }

// ------------------------------------------------------------------ narayana

struct NarayanaArgs {
  int k = 0;
  std::string method = "rec";
  bool json = false;
};

int cmd_narayana(const NarayanaArgs& a, std::ostream& out) {
  LaurentPoly value;
  if (a.method == "enum") {
    if (a.k < 0) throw DomainError("--method enum needs k >= 0; negative indices use the recurrence convention");
    value = narayana_enum(a.k);
  } else {
    value = narayana(a.k);
  }
  if (a.json) {
    out << to_json(value).dump() << "\n";
  } else {
    out << "N_" << a.k << " = " << to_string(value) << "\n";
    if (a.k < 0) out << "convention: " << kNegativeConvention << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------------- det

struct DetArgs {
  int s = 0;
  int n = 0;
  std::string method = "entry";
  bool json = false;
};

int cmd_det(const DetArgs& a, std::ostream& out) {
  if (a.n < 0) throw DomainError("--n must be nonnegative");
  auto toeplitz = [&] {
    const int lo = a.s - a.n + 1;
    const int hi = std::max(lo, a.s + a.n - 1);
    return toeplitz_det(moments(qnarayana_coeffs(), lo, hi), a.s, a.n);
  };
  auto sylvester = [&] {
    DetTable table = DetTable::band_seeded();
    return sylvester_extend(table, a.s, a.n);
  };
  const bool closed_ok = a.s >= -a.n && a.s <= a.n + 1;

  LaurentPoly value;
  if (a.method == "entry") {
    value = narayana_det(a.s, a.n);
  } else if (a.method == "toeplitz") {
    value = toeplitz();
  } else if (a.method == "closed") {
    value = det_closed(a.s, a.n);
  } else {
    value = sylvester();
  }

  Report report;
  auto cross = [&](const char* name, const std::function<LaurentPoly()>& other) {
    if (a.method == name) return;
    try {
      report.push_back(make_check(std::string("det_vs_") + name, a.n, a.s, value, other()));
    } catch (const SizeLimitExceeded&) {
      // Outside this route's range; the other routes still cross-check.
    }
  };
  cross("entry", [&] { return narayana_det(a.s, a.n); });
  cross("toeplitz", toeplitz);
  if (closed_ok) cross("closed", [&] { return det_closed(a.s, a.n); });
  cross("sylvester", sylvester);
  if (a.s == a.n + 2) report.push_back(make_check("det_vs_n_plus_2_form", a.n, a.s, value, det_s_np2(a.n)));

  if (a.json) {
    Json j;
    j["s"] = a.s;
    j["n"] = a.n;
    j["method"] = a.method;
    j["value"] = to_json(value);
    j["report"] = to_json(report);
    out << j.dump() << "\n";
  } else {
    out << "N^(" << a.s << ")_" << a.n << " = " << to_string(value) << "\n";
    print_report_text(out, report);
  }
  return report_exit(report);
}

// --------------------------------------------------------------------- paths

struct PathsArgs {
  int k = 0;
  std::string svg;
  bool json = false;
};

int cmd_paths(const PathsArgs& a, std::ostream& out) {
  const auto paths = enumerate_paths(a.k);
  LaurentPoly genpoly;
  Json list = Json::array();
  for (const auto& p : paths) {
    const PathStats st = path_stats(p);
    genpoly += LaurentPoly::monomial(st.level, st.area);
    Json j = to_json(p);
    j["level"] = st.level;
    j["area"] = st.area;
    j["length"] = st.length;
    list.push_back(std::move(j));
  }
  if (!a.svg.empty()) write_file(a.svg, render_paths_svg(paths));
  if (a.json) {
    Json j;
    j["k"] = a.k;
    j["count"] = paths.size();
    j["paths"] = std::move(list);
    j["genpoly"] = to_json(genpoly);
    out << j.dump() << "\n";
  } else {
    out << "|S_" << a.k << "| = " << paths.size() << "\n";
    for (const auto& j : list) {
      out << "  " << (j["steps"].get<std::string>().empty() ? "(empty)" : j["steps"].get<std::string>())
          << "  level=" << j["level"] << " area=" << j["area"] << "\n";
    }
    out << "sum t^level q^area = " << to_string(genpoly) << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- nipaths

struct NipathsArgs {
  int m = 0;
  int n = 0;
  std::string svg;
  bool json = false;
};

int cmd_nipaths(const NipathsArgs& a, std::ostream& out) {
  const auto tuples = enumerate_tuples(a.m, a.n);
  LaurentPoly genpoly;
  for (const auto& t : tuples) {
    const PathStats st = tuple_stats(t);
    genpoly += LaurentPoly::monomial(st.level, st.area);
  }
  Report report;
  if (a.m == 0 || a.m == 1) report.push_back(make_check("closed_form", a.n, a.m, genpoly, tuple_genpoly_closed(a.m, a.n)));
  if (!a.svg.empty()) {
    if (tuples.empty()) throw DomainError("no tuple to draw");
    write_file(a.svg, render_tuple_svg(tuples.front()));
  }
  if (a.json) {
    Json j;
    j["m"] = a.m;
    j["n"] = a.n;
    j["count"] = tuples.size();
    j["genpoly"] = to_json(genpoly);
    j["report"] = to_json(report);
    out << j.dump() << "\n";
  } else {
    out << "|S_(" << a.m << "," << a.n << ")| = " << tuples.size() << "\n";
    out << "sum t^level q^area = " << to_string(genpoly) << "\n";
    print_report_text(out, report);
  }
  return report_exit(report);
}

// ----------------------------------------------------------------------- lbp

struct LbpArgs {
  int n = 3;
  std::string system = "qnarayana";
  std::uint64_t seed = 1;
  std::string check = "all";
  bool json = false;
};

int cmd_lbp(const LbpArgs& a, std::ostream& out) {
  if (a.n < 0) throw DomainError("--n must be nonnegative");
  const CoefficientSeq cs = a.system == "qnarayana" ? qnarayana_coeffs() : random_rational_coeffs(a.seed, 2 * a.n + 4);
  const LBPSystem sys = LBPSystem::build(cs, a.n + 1, -(a.n + 2), 2 * a.n + 2);
  Report report;
  const bool all = a.check == "all";
  if (all || a.check == "orthogonality") append(report, orthogonality_check(sys, a.n));
  if (all || a.check == "pade") {
    for (int n = 0; n <= a.n; ++n) append(report, pade_check(sys, n, 2));
  }
  if (all || a.check == "moments") append(report, generalized_moment_check(sys, a.n, a.n));
  if (all || a.check == "convergents") append(report, convergent_check(cs, a.n));
  if (all || a.check == "inverted") append(report, inverted_recurrence_check(cs, a.n));

  if (a.json) {
    Json j;
    j["system"] = cs.name();
    j["n"] = a.n;
    j["P"] = Json::array();
    for (int k = 0; k <= a.n; ++k) j["P"].push_back(to_json(sys.P[static_cast<std::size_t>(k)]));
    j["report"] = to_json(report);
    out << j.dump() << "\n";
  } else {
    for (int k = 0; k <= a.n; ++k) out << "P_" << k << " = " << to_string(sys.P[static_cast<std::size_t>(k)]) << "\n";
    out << failure_count(report) << " of " << report.size() << " checks failed\n";
    for (const auto& e : report) {
      if (!e.pass) print_report_text(out, {e});
    }
  }
  return report_exit(report);
}

// --------------------------------------------------------------------- aztec

struct AztecArgs {
  int n = 1;
  std::string variant = "none";
  std::string check;
  std::string svg;
  int tiling = 0;
  bool json = false;
};

int cmd_aztec(const AztecArgs& a, std::ostream& out) {
  const RegionKind kind = a.variant == "cut2" ? RegionKind::aztec_cut2 : RegionKind::aztec;
  const Region region = build_region(kind, a.n);
  const LaurentPoly genpoly = tiling_genpoly(region);
  const LaurentPoly formula = kind == RegionKind::aztec ? adt_formula(a.n) : variant_formula(a.n);

  Report report;
  if (a.check.empty() || a.check == "adt") report.push_back(make_check("closed_form", a.n, 0, genpoly, formula));
  if (a.check == "stats" || a.check == "lemma71") {
    if (kind != RegionKind::aztec) throw DomainError("--check stats applies to the full diamond");
    append(report, tiling_stats_check(a.n));
  }
  if (a.check == "bijection") append(report, bijection_check(region));

  if (!a.svg.empty()) {
    const auto tilings = enumerate_tilings(region);
    if (a.tiling < 0 || a.tiling >= static_cast<int>(tilings.size())) {
      throw DomainError("--tiling must lie in [0, " + std::to_string(tilings.size()) + ")");
    }
    write_file(a.svg, render_tiling_svg(tilings[static_cast<std::size_t>(a.tiling)]));
  }
  if (a.json) {
    Json j;
    j["n"] = a.n;
    j["variant"] = a.variant;
    j["cells"] = region.size();
    j["genpoly"] = to_json(genpoly);
    j["report"] = to_json(report);
    out << j.dump() << "\n";
  } else {
    out << "sum t^v q^r = " << to_string(genpoly) << "\n";
    out << failure_count(report) << " of " << report.size() << " checks failed\n";
    for (const auto& e : report) {
      if (!e.pass) print_report_text(out, {e});
    }
  }
  return report_exit(report);
}

// ---------------------------------------------------------------- verify-all

struct VerifyArgs {
  int budget = 300;
  bool json = false;
};

// Below this many seconds the larger optional orders are skipped.
constexpr int kOptionalBudget = 60;

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.budget <= 0) throw DomainError("--budget must be positive");
  VerifyOptions opts;
  opts.include_optional = a.budget >= kOptionalBudget;
  const auto results = run_acceptance(opts);
  bool ok = true;
  for (const auto& c : results) ok = ok && c.pass();
  if (a.json) {
    out << to_json(results).dump() << "\n";
  } else {
    for (const auto& c : results) out << format_criterion(c);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Narayana, moment determinant and Aztec diamond computations", "narayana_lab"};
  app.require_subcommand(1);

  NarayanaArgs narayana_args;
  auto* narayana_cmd = app.add_subcommand("narayana", "q-Narayana polynomial N_k(t,q)");
  narayana_cmd->add_option("--k", narayana_args.k, "index (negative indices use the moment convention)")->required();
  narayana_cmd->add_option("--method", narayana_args.method)->check(CLI::IsMember({"enum", "rec"}));
  narayana_cmd->add_flag("--json", narayana_args.json);

  DetArgs det_args;
  auto* det_cmd = app.add_subcommand("det", "determinant det(N_(s+j-k-1)) with cross-checks");
  det_cmd->add_option("--s", det_args.s)->required();
  det_cmd->add_option("--n", det_args.n)->required();
  det_cmd->add_option("--method", det_args.method)->check(CLI::IsMember({"entry", "toeplitz", "closed", "sylvester"}));
  det_cmd->add_flag("--json", det_args.json);

  PathsArgs paths_args;
  auto* paths_cmd = app.add_subcommand("paths", "Schroeder paths S_k with statistics");
  paths_cmd->add_option("--k", paths_args.k)->required();
  paths_cmd->add_option("--svg", paths_args.svg, "write an SVG drawing");
  paths_cmd->add_flag("--json", paths_args.json);

  NipathsArgs nipaths_args;
  auto* nipaths_cmd = app.add_subcommand("nipaths", "non-intersecting tuples S_(m,n)");
  nipaths_cmd->add_option("--m", nipaths_args.m)->required();
  nipaths_cmd->add_option("--n", nipaths_args.n)->required();
  nipaths_cmd->add_option("--svg", nipaths_args.svg, "draw the first tuple");
  nipaths_cmd->add_flag("--json", nipaths_args.json);

  LbpArgs lbp_args;
  auto* lbp_cmd = app.add_subcommand("lbp", "Laurent biorthogonal polynomials and their checks");
  lbp_cmd->add_option("--n", lbp_args.n, "highest degree checked");
  lbp_cmd->add_option("--system", lbp_args.system)->check(CLI::IsMember({"qnarayana", "random"}));
  lbp_cmd->add_option("--seed", lbp_args.seed, "seed for --system random");
  lbp_cmd->add_option("--check", lbp_args.check)
      ->check(CLI::IsMember({"all", "orthogonality", "pade", "moments", "convergents", "inverted"}));
  lbp_cmd->add_flag("--json", lbp_args.json);

  AztecArgs aztec_args;
  auto* aztec_cmd = app.add_subcommand("aztec", "domino tilings of the Aztec diamond");
  aztec_cmd->add_option("--n", aztec_args.n)->required();
  aztec_cmd->add_option("--variant", aztec_args.variant)->check(CLI::IsMember({"none", "cut2"}));
  aztec_cmd->add_option("--check", aztec_args.check)->check(CLI::IsMember({"adt", "stats", "lemma71", "bijection"}));
  aztec_cmd->add_option("--svg", aztec_args.svg, "draw a tiling with its path overlay");
  aztec_cmd->add_option("--tiling", aztec_args.tiling, "index of the tiling drawn by --svg");
  aztec_cmd->add_flag("--json", aztec_args.json);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-all", "run the acceptance suite");
  verify_cmd->add_option("--budget", verify_args.budget, "seconds available; small budgets skip optional orders");
  verify_cmd->add_flag("--json", verify_args.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "narayana_lab: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*narayana_cmd) return cmd_narayana(narayana_args, out);
    if (*det_cmd) return cmd_det(det_args, out);
    if (*paths_cmd) return cmd_paths(paths_args, out);
    if (*nipaths_cmd) return cmd_nipaths(nipaths_args, out);
    if (*lbp_cmd) return cmd_lbp(lbp_args, out);
    if (*aztec_cmd) return cmd_aztec(aztec_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
  } catch (const LabError& e) {
    err << "narayana_lab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nlab::cli
