#include "narayana_lab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "narayana_lab/aztec.hpp"
#include "narayana_lab/coeffs.hpp"
#include "narayana_lab/dets.hpp"
#include "narayana_lab/errors.hpp"
#include "narayana_lab/lbp.hpp"
#include "narayana_lab/nipaths.hpp"
#include "narayana_lab/paths.hpp"
#include "narayana_lab/qnarayana.hpp"

namespace nlab {

namespace {

using Mono = std::tuple<long, Exponent, Exponent>;  // coeff, e_t, e_q

LaurentPoly poly(std::initializer_list<Mono> terms) {
  LaurentPoly out;
  for (const auto& [c, et, eq] : terms) out += LaurentPoly::monomial(et, eq, c);
  return out;
}

LaurentPoly integer(const mpz_class& v) { return LaurentPoly(Rational(v)); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

LaurentPoly div(const LaurentPoly& a, const LaurentPoly& b) { return lp_exact_div(a, b); }

VerifyItem item(std::string name, const std::function<Report()>& body, bool optional = false, bool run = true) {
  VerifyItem it;
  it.name = std::move(name);
  it.optional = optional;
  if (!run) return it;
  it.ran = true;
  try {
    it.checks = body();
  } catch (const std::exception& e) {
    it.error = e.what();
  }
  return it;
}

// Collects checks into one report with a shared name prefix.
class Collector {
 public:
  void eq(std::string name, int n, int k, LaurentPoly lhs, LaurentPoly rhs) {
    r_.push_back(make_check(std::move(name), n, k, std::move(lhs), std::move(rhs)));
  }
  void truth(std::string name, int n, int k, bool ok) { r_.push_back({std::move(name), n, k, ok, ok ? 1 : 0, 1}); }
  void add(const Report& r) { append(r_, r); }
  Report take() { return std::move(r_); }

 private:
  Report r_;
};

// Large Schroeder numbers by a height-indexed count over the lattice.
mpz_class schroeder_count(int k) {
  // ways[x][h]: paths from (0,0) to (x,h) staying at height >= 0.
  const int width = 2 * k;
  std::vector<std::vector<mpz_class>> ways(static_cast<std::size_t>(width) + 1,
                                           std::vector<mpz_class>(static_cast<std::size_t>(k) + 2, 0));
  ways[0][0] = 1;
  for (int x = 0; x < width; ++x) {
    for (int h = 0; h <= k; ++h) {
      const mpz_class& w = ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(h)];
      if (w == 0) continue;
      ways[static_cast<std::size_t>(x) + 1][static_cast<std::size_t>(h) + 1] += w;
      if (h > 0) ways[static_cast<std::size_t>(x) + 1][static_cast<std::size_t>(h) - 1] += w;
      if (x + 2 <= width) ways[static_cast<std::size_t>(x) + 2][static_cast<std::size_t>(h)] += w;
    }
  }
  return ways[static_cast<std::size_t>(width)][0];
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  LaurentPoly out;
  const int terms = count(rng);
  for (int k = 0; k < terms; ++k) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    out += LaurentPoly::monomial(expo(rng), expo(rng), c);
  }
  return out;
}

std::vector<CoefficientSeq> sweep_systems() {
  std::vector<CoefficientSeq> out{qnarayana_coeffs()};
  for (std::uint64_t seed : {11U, 23U, 47U}) out.push_back(random_rational_coeffs(seed, 12));
  return out;
}

// ---------------------------------------------------------------- criterion 1

Criterion criterion_narayana(const VerifyOptions&) {
  Criterion c{1, "q-Narayana values", {}};
  c.items.push_back(item("N_1, N_2, N_3 by enumeration", [] {
    Collector col;
    col.eq("narayana_enum", 1, 0, narayana_enum(1), poly({{1, 1, 0}, {1, 0, 1}}));
    col.eq("narayana_enum", 2, 0, narayana_enum(2), poly({{1, 2, 0}, {2, 1, 1}, {1, 1, 3}, {1, 0, 2}, {1, 0, 4}}));
    col.eq("narayana_enum", 3, 0, narayana_enum(3),
           poly({{1, 3, 0}, {3, 2, 1}, {2, 2, 3}, {1, 2, 5}, {3, 1, 2}, {4, 1, 4}, {2, 1, 6}, {1, 1, 8},
                 {1, 0, 3}, {2, 0, 5}, {1, 0, 7}, {1, 0, 9}}));
    return col.take();
  }));
  c.items.push_back(item("enumeration equals recurrence, k <= 8", [] {
    Collector col;
    for (int k = 0; k <= 8; ++k) col.eq("enum_vs_rec", k, 0, narayana_enum(k), narayana_rec(k));
    return col.take();
  }));
  c.items.push_back(item("N_k(1,1) = 1, 2, 6, 22, 90", [] {
    Collector col;
    const long expected[] = {1, 2, 6, 22, 90};
    for (int k = 0; k <= 4; ++k) {
      col.eq("schroeder_value", k, 0, LaurentPoly(lp_eval(narayana_enum(k), 1, 1)), expected[k]);
    }
    return col.take();
  }));
  c.items.push_back(item("N_k(0,1) = Catalan numbers, k <= 8", [] {
    Collector col;
    for (int k = 0; k <= 8; ++k) {
      const mpz_class catalan = binomial(2UL * static_cast<unsigned long>(k), static_cast<unsigned long>(k)) / (k + 1);
      col.eq("catalan_value", k, 0, LaurentPoly(lp_eval(narayana_enum(k), 0, 1)), integer(catalan));
    }
    return col.take();
  }));
  return c;
}

// ---------------------------------------------------------------- criterion 2

// The displayed moments f_-2 .. f_3 written in the primal symbols, with the
// dual labels expanded as b_n / (c_(n-1) c_n), 1 / c_n and kappa / c_0.
std::vector<std::pair<int, LaurentPoly>> displayed_moments(const LaurentPoly& kappa,
                                                           const std::function<LaurentPoly(int)>& b,
                                                           const std::function<LaurentPoly(int)>& c) {
  const LaurentPoly kt = div(kappa, c(0));
  const LaurentPoly bt1 = div(b(1), c(0) * c(1));
  const LaurentPoly bt2 = div(b(2), c(1) * c(2));
  const LaurentPoly ct0 = div(1, c(0));
  const LaurentPoly ct1 = div(1, c(1));
  return {
      {-2, kt * (bt1 * bt2 + bt1 * bt1 + bt1 * ct1 + LaurentPoly(2) * bt1 * ct0 + ct0 * ct0)},
      {-1, kt * (bt1 + ct0)},
      {0, kt},
      {1, kappa},
      {2, kappa * (b(1) + c(0))},
      {3, kappa * (b(1) * b(2) + b(1) * b(1) + b(1) * c(1) + LaurentPoly(2) * b(1) * c(0) + c(0) * c(0))},
  };
}

Report moment_list_report(const CoefficientSeq& cs, const std::string& label) {
  Collector col;
  const MomentTable f = moments(cs, -2, 3);
  auto b = [&cs](int n) { return cs.b(n); };
  auto c = [&cs](int n) { return cs.c(n); };
  for (const auto& [k, expected] : displayed_moments(cs.kappa(), b, c)) col.eq(label, 0, k, f.at(k), expected);
  return col.take();
}

Criterion criterion_moments(const VerifyOptions&) {
  Criterion c{2, "Moments from weighted paths", {}};
  c.items.push_back(item("f_-2 .. f_3, independent symbols", [] {
    return moment_list_report(generic::coeffs(), "moment_symbolic");
  }));
  c.items.push_back(item("f_-2 .. f_3, q-Narayana coefficients", [] {
    return moment_list_report(qnarayana_coeffs(), "moment_qnarayana");
  }));
  for (std::uint64_t seed : {11U, 23U, 47U}) {
    c.items.push_back(item("f_-2 .. f_3, random rational system " + std::to_string(seed), [seed] {
      return moment_list_report(random_rational_coeffs(seed, 6), "moment_random");
    }));
  }
  c.items.push_back(item("f_k = N_(k-1) for the q-Narayana system, -6 <= k <= 9", [] {
    Collector col;
    const MomentTable f = moments(qnarayana_coeffs(), -6, 9);
    for (int k = -6; k <= 9; ++k) col.eq("moment_narayana", 0, k, f.at(k), narayana(k - 1));
    return col.take();
  }));
  return c;
}

// ---------------------------------------------------------------- criterion 3

Criterion criterion_orthogonality(const VerifyOptions&) {
  Criterion c{3, "Orthogonality and Pade approximation", {}};
  c.items.push_back(item("orthogonality with h_n from Delta^(0), q-Narayana, n <= 5", [] {
    return orthogonality_check(LBPSystem::build(qnarayana_coeffs(), 5), 5);
  }));
  for (std::uint64_t seed : {11U, 23U, 47U}) {
    c.items.push_back(item("orthogonality, random rational system " + std::to_string(seed) + ", n <= 4", [seed] {
      return orthogonality_check(LBPSystem::build(random_rational_coeffs(seed, 8), 4), 4);
    }));
  }
  c.items.push_back(item("Pade agreement at infinity and zero, q-Narayana, n <= 4", [] {
    const LBPSystem sys = LBPSystem::build(qnarayana_coeffs(), 4, -8, 8);
    Report r;
    for (int n = 0; n <= 4; ++n) append(r, pade_check(sys, n, 3));
    return r;
  }));
  c.items.push_back(item("coefficient ratios of Delta^(0), Delta^(1), n <= 4", [] {
    Report r;
    for (const auto& cs : sweep_systems()) append(r, det_ratio_check(cs, 4));
    return r;
  }));
  c.items.push_back(item("bordered determinant form of P_n, n <= 4", [] {
    Collector col;
    for (const auto& cs : sweep_systems()) {
      const LBPSystem sys = LBPSystem::build(cs, 4);
      for (int n = 0; n <= 4; ++n) {
        const ZPoly det = lbp_determinant_form(sys, n);
        for (int i = 0; i <= n; ++i) col.eq("determinant_form", n, i, det.coeff(i), sys.P[static_cast<std::size_t>(n)].coeff(i));
      }
    }
    return col.take();
  }));
  return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion criterion_determinants(const VerifyOptions&) {
  Criterion c{4, "Moment determinants", {}};
  c.items.push_back(item("Delta^(3)_2 as eight monomials", [] {
    using generic::b;
    using generic::kappa;
    const auto c = [](int n) { return generic::c(n); };
    const MomentTable f = moments(generic::coeffs(), 2, 4);
    const LaurentPoly expected =
        -(kappa() * kappa() * b(1) *
          (c(0) * c(1) * c(1) + LaurentPoly(2) * b(2) * c(0) * c(1) + b(2) * b(2) * c(0) + b(2) * c(0) * c(2) +
           b(1) * b(2) * c(2) + b(2) * b(3) * c(0) + b(1) * b(2) * b(3)));
    Collector col;
    col.eq("delta_3_2", 2, 3, toeplitz_det(f, 3, 2), expected);
    col.eq("delta_3_2_bareiss", 2, 3, toeplitz_det(f, 3, 2, DetAlgorithm::bareiss), expected);
    return col.take();
  }));
  c.items.push_back(item("closed band s in {0,1} against both constructions, n <= 4", [] {
    Collector col;
    const MomentTable f = moments(qnarayana_coeffs(), -4, 5);
    for (int s = 0; s <= 1; ++s) {
      for (int n = 0; n <= 4; ++n) {
        col.eq("band_toeplitz", n, s, toeplitz_det(f, s, n), det_band_closed(s, n));
        col.eq("band_entry", n, s, narayana_det(s, n), det_band_closed(s, n));
        col.eq("band_cfs", n, s, det_closed_cfs(qnarayana_coeffs(), s, n), det_band_closed(s, n));
      }
    }
    return col.take();
  }));
  c.items.push_back(item("closed form for -n <= s <= n+1, n <= 4", [] {
    Collector col;
    const MomentTable f = moments(qnarayana_coeffs(), -8, 9);
    for (int n = 0; n <= 4; ++n) {
      for (int s = -n; s <= n + 1; ++s) {
        const LaurentPoly closed = det_closed(s, n);
        col.eq("closed_toeplitz", n, s, toeplitz_det(f, s, n), closed);
        col.eq("closed_entry", n, s, narayana_det(s, n), closed);
        col.eq("closed_bareiss", n, s, narayana_det(s, n, DetAlgorithm::bareiss), closed);
      }
    }
    return col.take();
  }));
  c.items.push_back(item("Sylvester extension, |s| <= 6, n <= 3", [] {
    Collector col;
    DetTable table = DetTable::band_seeded();
    for (int s = -6; s <= 6; ++s) {
      for (int n = 0; n <= 3; ++n) col.eq("sylvester_extend", n, s, sylvester_extend(table, s, n), narayana_det(s, n));
    }
    col.add(sylvester_identity_check(table));
    return col.take();
  }));
  c.items.push_back(item("N^(n+2)_n closed form, n <= 3", [] {
    Collector col;
    for (int n = 0; n <= 3; ++n) col.eq("det_s_np2", n, n + 2, det_s_np2(n), narayana_det(n + 2, n));
    return col.take();
  }));
  c.items.push_back(item("Gaussian binomials, Pascal against product, m <= 12", [] {
    Collector col;
    for (int m = 0; m <= 12; ++m) {
      for (int n = 0; n <= m; ++n) col.eq("qbinom", m, n, qbinom(m, n), qbinom_product(m, n));
    }
    return col.take();
  }));
  return c;
}

// ---------------------------------------------------------------- criterion 5

Criterion criterion_tuples(const VerifyOptions& opts) {
  Criterion c{5, "Non-intersecting path tuples", {}};
  VerifyItem eight = item("eight doubles behind Delta^(3)_2", [] {
    Collector col;
    col.eq("tuple_count_s12", 2, 1, static_cast<long>(enumerate_tuples(1, 2).size()), 8);
    return col.take();
  });
  eight.note = "S_(s-n,n) for (s,n) = (3,2) is S_(1,2); |S_(3,2)| itself is " +
               std::to_string(enumerate_tuples(3, 2).size());
  c.items.push_back(std::move(eight));
  c.items.push_back(item("tuple polynomial against the closed form, m in {0,1}, n <= 3", [] {
    Collector col;
    for (int m = 0; m <= 1; ++m) {
      for (int n = 0; n <= 3; ++n) col.eq("tuple_closed", n, m, tuple_genpoly(m, n), tuple_genpoly_closed(m, n));
    }
    return col.take();
  }));
  c.items.push_back(item(
      "tuple polynomial against the closed form, n = 4",
      [] {
        Collector col;
        for (int m = 0; m <= 1; ++m) col.eq("tuple_closed", 4, m, tuple_genpoly(m, 4), tuple_genpoly_closed(m, 4));
        return col.take();
      },
      true, opts.include_optional));
  c.items.push_back(item("tuple sums against determinants, q-Narayana and random systems", [] {
    Report r;
    for (const auto& cs : sweep_systems()) {
      for (int n = 1; n <= 3; ++n) {
        for (int s = n; s <= n + 3; ++s) append(r, tuple_det_check(cs, s, n));
        for (int s = -2; s <= -n + 1; ++s) append(r, tuple_det_check(cs, s, n));
      }
    }
    return r;
  }));
  c.items.push_back(item("tuple sums against determinants, independent symbols", [] {
    // Orders small enough that every symbol exponent stays inside the
    // encoding's range.
    Report r;
    const CoefficientSeq g = generic::coeffs();
    for (const auto& [s, n] : {std::pair{1, 1}, {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}, {0, 1}, {-1, 1}, {-1, 2}}) {
      append(r, tuple_det_check(g, s, n));
    }
    return r;
  }));
  return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion criterion_aztec(const VerifyOptions& opts) {
  Criterion c{6, "Aztec diamond generating polynomial", {}};
  c.items.push_back(item("generating polynomial against the product, n <= 3", [] {
    Collector col;
    for (int n = 0; n <= 3; ++n) col.eq("ad_poly", n, 0, ad_poly(n), adt_formula(n));
    return col.take();
  }));
  c.items.push_back(item(
      "generating polynomial against the product, n = 4", [] { return Report{make_check("ad_poly", 4, 0, ad_poly(4), adt_formula(4))}; },
      true, opts.include_optional));
  c.items.push_back(item("tiling counts 2^(n(n+1)/2), n <= 5", [] {
    Collector col;
    for (int n = 0; n <= 5; ++n) {
      const auto count = static_cast<long>(enumerate_tilings(build_region(RegionKind::aztec, n)).size());
      col.eq("tiling_count", n, 0, count, integer(mpz_class(1) << static_cast<mp_bitcnt_t>(n * (n + 1) / 2)));
    }
    return col.take();
  }));
  c.items.push_back(item("vertical-level and rank-area identities, n <= 3", [] {
    Report r;
    for (int n = 0; n <= 3; ++n) append(r, tiling_stats_check(n));
    return r;
  }));
  c.items.push_back(item("vertical-level and rank-area identities, n = 4", [] { return tiling_stats_check(4); }, true,
                         opts.include_optional));
  c.items.push_back(item("tiling and tuple bijection, n <= 3", [] {
    Report r;
    for (int n = 0; n <= 3; ++n) append(r, bijection_check(build_region(RegionKind::aztec, n)));
    return r;
  }));
  c.items.push_back(item("checkerboard coloring, n <= 5", [] {
    Report r;
    for (int n = 1; n <= 5; ++n) append(r, coloring_check(build_region(RegionKind::aztec, n)));
    return r;
  }));
  return c;
}

// ---------------------------------------------------------------- criterion 7

Criterion criterion_variant(const VerifyOptions& opts) {
  Criterion c{7, "Diamond with two south cells removed", {}};
  auto genpoly = [](int n) {
    Collector col;
    col.eq("variant", n, 0, tiling_genpoly(build_region(RegionKind::aztec_cut2, n)), variant_formula(n));
    return col.take();
  };
  c.items.push_back(item("generating polynomial against the formula, n <= 2", [&] {
    Report r;
    for (int n = 0; n <= 2; ++n) append(r, genpoly(n));
    return r;
  }));
  c.items.push_back(item("generating polynomial against the formula, n = 3", [&] { return genpoly(3); }, true,
                         opts.include_optional));
  c.items.push_back(item("tiling counts at t = q = 1, n <= 3", [] {
    Collector col;
    for (int n = 0; n <= 3; ++n) {
      const auto count = static_cast<long>(enumerate_tilings(build_region(RegionKind::aztec_cut2, n)).size());
      col.eq("variant_count", n, 0, count, LaurentPoly(lp_eval(variant_formula(n), 1, 1)));
    }
    return col.take();
  }));
  c.items.push_back(item("tiling and tuple bijection with S_(2,n), n <= 3", [] {
    Report r;
    for (int n = 0; n <= 3; ++n) append(r, bijection_check(build_region(RegionKind::aztec_cut2, n)));
    return r;
  }));
  return c;
}

// ---------------------------------------------------------------- criterion 8

Criterion criterion_properties(const VerifyOptions&) {
  Criterion c{8, "Property suite", {}};
  c.items.push_back(item("ring axioms on random operands", [] {
    Collector col;
    std::mt19937_64 rng(20240601);
    for (int k = 0; k < 200; ++k) {
      const LaurentPoly a = random_poly(rng);
      const LaurentPoly b = random_poly(rng);
      const LaurentPoly d = random_poly(rng);
      col.eq("associative_add", k, 0, (a + b) + d, a + (b + d));
      col.eq("associative_mul", k, 0, (a * b) * d, a * (b * d));
      col.eq("commutative_add", k, 0, a + b, b + a);
      col.eq("commutative_mul", k, 0, a * b, b * a);
      col.eq("distributive", k, 0, a * (b + d), a * b + a * d);
      col.eq("additive_inverse", k, 0, a - a, LaurentPoly{});
      if (!b.is_zero()) col.eq("exact_division", k, 0, div(a * b, b), a);
    }
    return col.take();
  }));
  c.items.push_back(item("inversion and evaluation homomorphisms", [] {
    Collector col;
    std::mt19937_64 rng(7);
    const Rational points[][2] = {{Rational(1), Rational(1)}, {Rational(2), Rational(-3)}, {Rational(-1, 2), Rational(5, 3)}};
    for (int k = 0; k < 200; ++k) {
      const LaurentPoly a = random_poly(rng);
      const LaurentPoly b = random_poly(rng);
      for (const Var v : {Var::t, Var::q}) {
        col.eq("subst_involution", k, 0, lp_subst_inverse(lp_subst_inverse(a, v), v), a);
        col.eq("subst_homomorphism", k, 0, lp_subst_inverse(a * b, v), lp_subst_inverse(a, v) * lp_subst_inverse(b, v));
      }
      for (const auto& pt : points) {
        const Rational lhs = lp_eval(a * b + a, pt[0], pt[1]);
        const Rational ea = lp_eval(a, pt[0], pt[1]);
        col.eq("eval_homomorphism", k, 0, LaurentPoly(lhs), LaurentPoly(ea * lp_eval(b, pt[0], pt[1]) + ea));
      }
      col.eq("json_roundtrip", k, 0, deserialize_laurent(serialize(a)), a);
    }
    return col.take();
  }));
  c.items.push_back(item("series expansion times denominator", [] {
    Collector col;
    const CoefficientSeq cs = qnarayana_coeffs();
    const auto P = lbp_sequence(cs, 5);
    const auto Q = lbp_numerators(cs, 5);
    for (int n = 1; n <= 5; ++n) {
      const int order = 6;
      const auto& den = P[static_cast<std::size_t>(n)];
      const auto& num = Q[static_cast<std::size_t>(n)];
      const FormalSeries zero = series_expand(num, den, SeriesPoint::zero, order);
      for (int i = 0; i <= order; ++i) {
        LaurentPoly acc;
        for (int j = 0; j <= i; ++j) acc += zero.at(j) * den.coeff(i - j);
        col.eq("series_zero_product", n, i, acc, num.coeff(i));
      }
      // At infinity: den(z) * sum_k s_k z^-k reproduces num through z^(deg - order).
      const FormalSeries inf = series_expand(num, den, SeriesPoint::infinity, order);
      for (int power = n; power >= n - order; --power) {
        LaurentPoly acc;
        for (int d = 0; d <= n; ++d) acc += den.coeff(d) * inf.at(power - d);
        col.eq("series_infinity_product", n, power, acc, power >= 0 ? num.coeff(power) : LaurentPoly{});
      }
    }
    return col.take();
  }));
  c.items.push_back(item("path counts against a lattice count, k <= 8", [] {
    Collector col;
    const long schroeder[] = {1, 2, 6, 22, 90, 394, 1806, 8558, 41586};
    for (int k = 0; k <= 8; ++k) {
      const auto count = static_cast<long>(enumerate_paths(k).size());
      col.eq("path_count_lattice", k, 0, count, integer(schroeder_count(k)));
      col.eq("path_count_table", k, 0, count, schroeder[k]);
    }
    return col.take();
  }));
  c.items.push_back(item("path statistics and weights, k <= 8", [] {
    Collector col;
    const CoefficientSeq cs = qnarayana_coeffs();
    for (int k = 0; k <= 8; ++k) {
      bool weight_ok = true;
      bool stats_ok = true;
      for (const auto& p : enumerate_paths(k)) {
        const PathStats st = path_stats(p);
        weight_ok = weight_ok && path_weight(p, cs) == LaurentPoly::monomial(st.level, st.area);
        const bool flat = std::all_of(p.steps().begin(), p.steps().end(), [](Step s) { return s == Step::Level; });
        stats_ok = stats_ok && p.valid() && st.length == k && st.area >= 0 && ((st.area == 0) == flat);
      }
      col.truth("weight_is_level_area", k, 0, weight_ok);
      col.truth("stats_shape", k, 0, stats_ok);
      col.eq("level_specialization", k, 0, lp_specialize(narayana_enum(k), Var::q, 1), classic_narayana(k));
      col.eq("area_specialization", k, 0, lp_specialize(narayana_enum(k), Var::t, 1), area_poly(k));
      col.eq("path_sum_transfer", k, 0, path_sum(k, cs), narayana_enum(k));
    }
    return col.take();
  }));
  c.items.push_back(item("tuple weights and member baselines", [] {
    Collector col;
    const CoefficientSeq cs = qnarayana_coeffs();
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n + m <= 5; ++n) {
        bool ok = true;
        for_each_tuple(m, n, [&](const PathTuple& t) {
          const PathStats st = tuple_stats(t);
          ok = ok && tuple_valid(t) && tuple_weight(t, cs) == LaurentPoly::monomial(st.level, st.area);
        });
        col.truth("tuple_weight_is_level_area", n, m, ok);
        col.eq("baseline_free", n, m, tuple_genpoly(m, n, {false}), tuple_genpoly(m, n));
      }
    }
    for (int n = 0; n <= 4; ++n) {
      col.eq("tuple_count_aztec", n, 1, LaurentPoly(lp_eval(tuple_genpoly(1, n), 1, 1)),
             integer(mpz_class(1) << static_cast<mp_bitcnt_t>(n * (n + 1) / 2)));
    }
    return col.take();
  }));
  c.items.push_back(item("LBP identities", [] {
    Report r;
    for (const auto& cs : sweep_systems()) {
      const LBPSystem sys = LBPSystem::build(cs, 6, -8, 12);
      append(r, constant_term_check(cs, 6));
      append(r, inverted_recurrence_check(cs, 5));
      append(r, moment_duality_check(cs, 4));
      append(r, convergent_check(cs, 4));
      append(r, generalized_moment_check(sys, 4, 4));
      append(r, tfrac_series_check(cs, 3, 5));
    }
    return r;
  }));
  c.items.push_back(item("negative Narayana indices against moments, m >= -6", [] {
    Collector col;
    const MomentTable f = moments(qnarayana_coeffs(), -5, 0);
    for (int m = -1; m >= -6; --m) col.eq("narayana_neg", 0, m, narayana_neg(m), f.at(m + 1));
    const CoefficientSeq cs = qnarayana_coeffs();
    const CoefficientSeq twice = dual_coeffs(dual_coeffs(cs));
    for (int n = 1; n <= 6; ++n) {
      col.eq("dual_involution_b", n, 0, twice.b(n), cs.b(n));
      col.eq("dual_involution_c", n, 0, twice.c(n), cs.c(n));
    }
    col.eq("dual_involution_kappa", 0, 0, twice.kappa(), cs.kappa());
    return col.take();
  }));
  c.items.push_back(item("move graph connectivity, n <= 4", [] {
    Collector col;
    for (int n = 0; n <= 4; ++n) {
      const auto tilings = enumerate_tilings(build_region(RegionKind::aztec, n));
      const auto ranks = rank_bfs(tilings);  // throws when disconnected
      col.truth("move_graph_connected", n, 0, ranks.size() == tilings.size());
    }
    return col.take();
  }));
  return c;
}

std::string first_failure(const VerifyItem& it) {
  if (!it.error.empty()) return "error: " + it.error;
  for (const auto& e : it.checks) {
    if (e.pass) continue;
    std::ostringstream out;
    out << e.check << " (n=" << e.n << ", k=" << e.k << "): " << to_string(e.lhs) << " != " << to_string(e.rhs);
    return out.str();
  }
  return {};
}

}  // namespace

bool Criterion::pass() const {
  return std::all_of(items.begin(), items.end(), [](const VerifyItem& it) { return it.pass(); });
}

std::size_t Criterion::check_count() const {
  std::size_t n = 0;
  for (const auto& it : items) n += it.checks.size();
  return n;
}

unsigned default_threads() {
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NARAYANA_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

std::vector<Criterion> run_acceptance(const VerifyOptions& opts) {
  using Runner = Criterion (*)(const VerifyOptions&);
  const std::vector<Runner> runners{criterion_narayana,     criterion_moments, criterion_orthogonality,
                                    criterion_determinants, criterion_tuples,  criterion_aztec,
                                    criterion_variant,      criterion_properties};
  std::vector<Criterion> results(runners.size());
  const unsigned threads = std::max(1U, std::min<unsigned>(opts.threads ? opts.threads : default_threads(),
                                                           static_cast<unsigned>(runners.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < runners.size(); k = next++) results[k] = runners[k](opts);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

std::string format_criterion(const Criterion& c) {
  std::ostringstream out;
  out << (c.pass() ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "  (" << c.items.size() << " items, "
      << c.check_count() << " checks)\n";
  for (const auto& it : c.items) {
    if (!it.ran) {
      out << "      skipped (optional): " << it.name << "\n";
    } else if (!it.pass()) {
      out << "      failed: " << it.name << ": " << first_failure(it) << "\n";
    }
    if (!it.note.empty()) out << "      note: " << it.note << "\n";
  }
  return out.str();
}

Json to_json(const std::vector<Criterion>& results) {
  Json out = Json::array();
  for (const auto& c : results) {
    Json jc;
    jc["criterion"] = c.id;
    jc["title"] = c.title;
    jc["pass"] = c.pass();
    jc["items"] = Json::array();
    for (const auto& it : c.items) {
      Json ji;
      ji["name"] = it.name;
      ji["optional"] = it.optional;
      ji["ran"] = it.ran;
      ji["pass"] = it.pass();
      ji["checks"] = it.checks.size();
      ji["failures"] = failure_count(it.checks);
      if (!it.error.empty()) ji["error"] = it.error;
      if (!it.note.empty()) ji["note"] = it.note;
      jc["items"].push_back(std::move(ji));
    }
    out.push_back(std::move(jc));
  }
  return out;
}

}  // namespace nlab
