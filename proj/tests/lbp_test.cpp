#include <doctest.h>

#include "narayana_lab/errors.hpp"
#include "narayana_lab/lbp.hpp"
#include "narayana_lab/qnarayana.hpp"

using namespace nlab;
using generic::b;
using generic::c;
using generic::kappa;

namespace {

LaurentPoly m(Exponent et, Exponent eq, long k = 1) { return LaurentPoly::monomial(et, eq, k); }

const ZPoly z = ZPoly::z();

}  // namespace

TEST_CASE("low-order polynomials with symbolic coefficients") {
  const auto P = lbp_sequence(generic::coeffs(), 3);
  CHECK(P[0] == ZPoly{1});
  CHECK(P[1] == ZPoly{-c(0), 1});
  CHECK(P[2] == ZPoly{c(0) * c(1), -(b(1) + c(0) + c(1)), 1});
  CHECK(P[3].constant_term() == -(c(0) * c(1) * c(2)));
  const auto Q = lbp_numerators(generic::coeffs(), 1);
  CHECK(Q[0].is_zero());
  CHECK(Q[1] == ZPoly{kappa()});
}

TEST_CASE("vanishing coefficients are rejected") {
  const auto zero_b = tabulated_coeffs({0, 1}, {1, 1, 1}, 1);
  CHECK_THROWS_AS(lbp_sequence(zero_b, 2), ZeroCoefficient);
}

TEST_CASE("dual coefficients of the q-Narayana system") {
  const auto d = dual_coeffs(qnarayana_coeffs());
  for (int n = 1; n <= 5; ++n) {
    CHECK(d.b(n) == m(-2, -2 * n + 1));
    CHECK(d.c(n) == m(-1, -2 * n));
  }
  CHECK(d.c(0) == m(-1, 0));
  CHECK(d.kappa() == m(-1, 0));
  CHECK(dual_coeffs(qnarayana_coeffs(m(0, 3))).kappa() == m(-1, 3));

  const auto dd = dual_coeffs(d);
  for (int n = 1; n <= 4; ++n) CHECK(dd.b(n) == qnarayana_coeffs().b(n));
  for (int n = 0; n <= 4; ++n) CHECK(dd.c(n) == qnarayana_coeffs().c(n));
  CHECK(dd.kappa() == 1);
}

TEST_CASE("inverted polynomials") {
  const LaurentPoly c0 = m(1, 2);
  CHECK(invert_lbp(ZPoly{-c0, 1}) == ZPoly{-lp_unit_inverse(c0), 1});
  const auto P = lbp_sequence(qnarayana_coeffs(), 4);
  for (const auto& p : P) CHECK(invert_lbp(invert_lbp(p)) == p);
  CHECK_THROWS_AS(invert_lbp(ZPoly{m(1, 0) + m(0, 1), 1}), NonUnitDivisor);
  CHECK(all_pass(inverted_recurrence_check(qnarayana_coeffs(), 5)));
}

TEST_CASE("moments in symbolic form") {
  const auto g = generic::coeffs();
  CHECK(moment(g, 1) == kappa());
  CHECK(moment(g, 2) == kappa() * (b(1) + c(0)));
  CHECK(moment(g, 3) ==
        kappa() * (b(1) * b(2) + b(1) * b(1) + b(1) * c(1) + LaurentPoly(2) * b(1) * c(0) + c(0) * c(0)));
  // Dual symbols written back in primal terms: kappa~ = kappa/c0, and so on.
  const auto d = dual_coeffs(g);
  CHECK(moment(g, 0) == d.kappa());
  CHECK(moment(g, -1) == d.kappa() * (d.b(1) + d.c(0)));
  CHECK(moment(g, 0) * c(0) == kappa());
}

TEST_CASE("moment window") {
  const MomentTable f = moments(qnarayana_coeffs(), -3, 5);
  CHECK(f.kmin() == -3);
  CHECK(f.kmax() == 5);
  for (int k = 1; k <= 5; ++k) CHECK(f.at(k) == narayana_rec(k - 1));
  CHECK_THROWS_AS(f.at(6), WindowExceeded);
}

TEST_CASE("functional") {
  const auto g = generic::coeffs();
  const MomentTable f = moments(g, -3, 4);
  CHECK(functional_apply(f, z) == kappa());
  CHECK(functional_apply(f, ZPoly{-c(0), 1}).is_zero());
  const LaurentPoly h1 = functional_apply(f, ZPoly{-c(0), 1}, -1);
  CHECK(h1 == moment(g, 0) - c(0) * moment(g, -1));
  CHECK_FALSE(h1.is_zero());
  CHECK_THROWS_AS(functional_apply(f, z, 4), WindowExceeded);
}

TEST_CASE("orthogonality and Pade approximation, q-Narayana") {
  const auto sys = LBPSystem::build(qnarayana_coeffs(), 5);
  const Report orth = orthogonality_check(sys, 5);
  CHECK(!orth.empty());
  CHECK(all_pass(orth));
  for (int n = 1; n <= 4; ++n) CHECK(all_pass(pade_check(sys, n, 0)));
}

TEST_CASE("orthogonality on seeded random systems") {
  for (std::uint64_t seed : {3u, 8u}) {
    const auto sys = LBPSystem::build(random_rational_coeffs(seed, 10), 4);
    CHECK(all_pass(orthogonality_check(sys, 4)));
    CHECK(all_pass(pade_check(sys, 3, 0)));
  }
}

TEST_CASE("first convergent at infinity") {
  const auto cs = qnarayana_coeffs(m(0, 2));
  const auto P = lbp_sequence(cs, 1);
  const auto Q = lbp_numerators(cs, 1);
  const FormalSeries s = series_expand(Q[1], P[1], SeriesPoint::infinity, 2);
  CHECK(s.at(-1) == m(0, 2));
  // Q_1/P_1 = kappa/(z - c_0) agrees with the moments only through z^-1.
  CHECK(s.at(-2) == m(0, 2) * m(1, 0));
  CHECK(s.at(-2) != moment(cs, 2));
}

TEST_CASE("generalized moments") {
  const auto g = generic::coeffs();
  const auto sys = LBPSystem::build(g, 3, -4, 6);
  CHECK(all_pass(generalized_moment_check(sys, 2, 2)));
  // f(n,0) = F[P_n z] = kappa b_1 ... b_n.
  CHECK(functional_apply(sys.moments, sys.P[1], 1) == kappa() * b(1));
  CHECK(functional_apply(sys.moments, sys.P[2], 1) == kappa() * b(1) * b(2));
  // f(1,1) by the recurrence: f(2,0) + c_1 f(1,0) + b_1 f(0,1).
  CHECK(functional_apply(sys.moments, sys.P[1], 2) ==
        kappa() * b(1) * b(2) + c(1) * kappa() * b(1) + b(1) * moment(g, 2));
}

TEST_CASE("series of the convergent") {
  CHECK(all_pass(tfrac_series_check(qnarayana_coeffs(), 3, 5)));
  CHECK(all_pass(tfrac_series_check(generic::coeffs(), 2, 3)));
  const auto cs = qnarayana_coeffs();
  const auto P = lbp_sequence(cs, 5);
  const auto Q = lbp_numerators(cs, 5);
  const FormalSeries s = series_expand(Q[5], P[5], SeriesPoint::infinity, 4);
  for (int j = 0; j <= 3; ++j) CHECK(s.at(-(j + 1)) == narayana_rec(j));
}

TEST_CASE("bordered determinant form") {
  const auto sys = LBPSystem::build(qnarayana_coeffs(), 3);
  CHECK(lbp_determinant_form(sys, 0) == ZPoly{1});
  CHECK(lbp_determinant_form(sys, 1) == ZPoly{-m(1, 0), 1});
  CHECK(lbp_determinant_form(sys, 3) == sys.P[3]);
}

TEST_CASE("remaining structural checks") {
  CHECK(all_pass(convergent_check(qnarayana_coeffs(), 4)));
  CHECK(all_pass(convergent_check(generic::coeffs(), 3)));
  CHECK(all_pass(constant_term_check(generic::coeffs(), 4)));
  CHECK(all_pass(moment_duality_check(qnarayana_coeffs(), 5)));
  CHECK(all_pass(moment_duality_check(random_rational_coeffs(19, 10), 4)));
}
