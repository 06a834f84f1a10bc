#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "narayana_lab/dets.hpp"
#include "narayana_lab/errors.hpp"
#include "narayana_lab/lbp.hpp"
#include "narayana_lab/qnarayana.hpp"

using namespace nlab;
using generic::b;
using generic::c;
using generic::kappa;

namespace {

LaurentPoly m(Exponent et, Exponent eq, long k = 1) { return LaurentPoly::monomial(et, eq, k); }

// Leibniz expansion over all permutations.
LaurentPoly leibniz(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    LaurentPoly term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("determinant algorithms agree with the Leibniz formula") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 5;
    Matrix a(n, std::vector<LaurentPoly>(n));
    for (auto& row : a)
      for (auto& e : row) e = LaurentPoly::monomial(expo(rng), 0, coef(rng)) + LaurentPoly::monomial(0, expo(rng), coef(rng));
    const LaurentPoly expected = leibniz(a);
    CHECK(determinant(a, DetAlgorithm::minors) == expected);
    CHECK(determinant(a, DetAlgorithm::bareiss) == expected);
  }
  CHECK(determinant(Matrix{}) == 1);
  // A zero leading entry forces a row swap in elimination.
  const Matrix swap{{0, 1}, {1, 0}};
  CHECK(determinant(swap, DetAlgorithm::bareiss) == -1);
}

TEST_CASE("Toeplitz layout") {
  const MomentTable f = moments(generic::coeffs(), -3, 5);
  const Matrix t = toeplitz_matrix(f, 2, 3);
  CHECK(t[0][0] == f.at(2));
  CHECK(t[0][2] == f.at(4));
  CHECK(t[2][0] == f.at(0));
  CHECK(toeplitz_det(f, 5, 0) == 1);
}

TEST_CASE("eight-monomial determinant") {
  const MomentTable f = moments(generic::coeffs(), 0, 5);
  const LaurentPoly expected =
      -(kappa() * kappa() * b(1) *
        (c(0) * c(1) * c(1) + LaurentPoly(2) * b(2) * c(0) * c(1) + b(2) * b(2) * c(0) + b(2) * c(0) * c(2) +
         b(1) * b(2) * c(2) + b(2) * b(3) * c(0) + b(1) * b(2) * b(3)));
  CHECK(toeplitz_det(f, 3, 2) == expected);
  CHECK(toeplitz_det(f, 3, 2, DetAlgorithm::bareiss) == expected);
}

TEST_CASE("determinant one step below the axis") {
  const auto g = generic::coeffs();
  const auto d = dual_coeffs(g);
  const MomentTable f = moments(g, -4, 2);
  CHECK(toeplitz_det(f, -1, 2) == -(d.kappa() * d.kappa() * d.b(1) * (d.c(1) + d.b(2))));
}

TEST_CASE("closed forms from the recurrence coefficients") {
  const auto g = generic::coeffs();
  CHECK(det_closed_cfs(g, 1, 1) == kappa());
  CHECK(det_closed_cfs(g, 1, 0) == 1);
  const MomentTable f = moments(g, -3, 4);
  for (int n = 0; n <= 2; ++n) {
    CHECK(det_closed_cfs(g, 1, n) == toeplitz_det(f, 1, n));
    CHECK(det_closed_cfs(g, 0, n) == toeplitz_det(f, 0, n));
  }
  for (int n = 1; n <= 5; ++n) {
    const long e = n * (n - 1) / 2;
    const LaurentPoly sign = e % 2 ? -1 : 1;
    CHECK(det_closed_cfs(qnarayana_coeffs(), 1, n) == sign * m(-e, e));
    CHECK(det_closed_cfs(qnarayana_coeffs(), 0, n) == sign * m(-n * (n + 1) / 2, -e));
  }
  CHECK(all_pass(det_ratio_check(g, 2)));
  CHECK(all_pass(det_ratio_check(qnarayana_coeffs(), 4)));
}

TEST_CASE("q-Narayana determinants") {
  CHECK(narayana_det(1, 1) == 1);
  CHECK(narayana_det(1, 2) == -m(-1, 1));
  CHECK(narayana_det(0, 2) == -m(-3, -1));
  const LaurentPoly n1 = narayana_rec(1);
  CHECK(narayana_det(2, 2) == n1 * n1 - narayana_rec(2));
  CHECK(narayana_det(2, 2) == -(m(1, 3) + m(0, 4)));
  CHECK(narayana_det(2, 2, DetAlgorithm::bareiss) == narayana_det(2, 2));
  for (int n = 0; n <= 4; ++n) {
    CHECK(det_band_closed(1, n) == narayana_det(1, n));
    CHECK(det_band_closed(0, n) == narayana_det(0, n));
  }
}

TEST_CASE("closed form across the admissible range") {
  CHECK(det_closed(2, 2) == -(m(1, 3) + m(0, 4)));
  for (int n = 0; n <= 4; ++n)
    for (int s = -n; s <= n + 1; ++s) CHECK(det_closed(s, n) == narayana_det(s, n));
  CHECK_THROWS_AS(det_closed(5, 2), DomainError);
  CHECK_THROWS_AS(det_closed(-3, 2), DomainError);
}

TEST_CASE("Sylvester extension") {
  DetTable table = DetTable::band_seeded();
  CHECK(sylvester_extend(table, 2, 2) == narayana_det(2, 2));
  CHECK(sylvester_extend(table, 4, 2) == det_s_np2(2));
  CHECK(sylvester_extend(table, -3, 3) == narayana_det(-3, 3));
  CHECK(sylvester_extend(table, 6, 3) == narayana_det(6, 3));
  CHECK(table.find(0, 0) == LaurentPoly(1));
  CHECK(table.find(7, -1) == LaurentPoly());
  const Report r = sylvester_identity_check(table);
  CHECK(!r.empty());
  CHECK(all_pass(r));
  CHECK_THROWS_AS(sylvester_extend(table, 99, 2), SizeLimitExceeded);
  CHECK_THROWS_AS(narayana_det(99, 2), SizeLimitExceeded);
}

TEST_CASE("Gaussian binomials") {
  CHECK(qbinom(2, 1) == 1 + m(0, 1));
  CHECK(qbinom(4, 2) == 1 + m(0, 1) + m(0, 2, 2) + m(0, 3) + m(0, 4));
  for (int a = 0; a <= 7; ++a)
    for (int k = 0; k <= a; ++k) {
      CHECK(qbinom(a, k) == qbinom_product(a, k));
      mpz_class ordinary;
      mpz_bin_uiui(ordinary.get_mpz_t(), a, k);
      CHECK(lp_eval(qbinom(a, k), 1, 1) == Rational(ordinary));
      CHECK(qbinom(a, k) == qbinom(a, a - k));
    }
  CHECK_THROWS_AS(qbinom(2, 3), DomainError);
}

TEST_CASE("closed value two steps above the diagonal") {
  CHECK(det_s_np2(0) == 1);
  CHECK(det_s_np2(1) == narayana_rec(2));
  for (int n = 2; n <= 3; ++n) CHECK(det_s_np2(n) == narayana_det(n + 2, n));
}
