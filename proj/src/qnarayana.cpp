#include "narayana_lab/qnarayana.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "narayana_lab/errors.hpp"
#include "narayana_lab/limits.hpp"
#include "narayana_lab/paths.hpp"

namespace nlab {

LaurentPoly narayana_enum(int k) {
  if (k < 0) throw DomainError("narayana_enum needs k >= 0");
  LaurentPoly sum;
  for (const auto& p : enumerate_paths(k)) {
    const PathStats st = path_stats(p);
    sum += LaurentPoly::monomial(st.level, st.area);
  }
  return sum;
}

LaurentPoly narayana_rec(int k) {
  if (k < 0) throw DomainError("narayana_rec needs k >= 0");
  if (k > limits::kMaxMomentIndex) {
    throw SizeLimitExceeded("narayana_rec is limited to k <= " + std::to_string(limits::kMaxMomentIndex));
  }
  static std::mutex mu;
  static std::vector<LaurentPoly> cache{LaurentPoly(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= k) {
    const int n = static_cast<int>(cache.size());
    LaurentPoly next = LaurentPoly::t() * cache[static_cast<std::size_t>(n - 1)];
    for (int j = 0; j < n; ++j) {
      next += LaurentPoly::q(2 * j + 1) * cache[static_cast<std::size_t>(j)] *
              cache[static_cast<std::size_t>(n - j - 1)];
    }
    cache.push_back(std::move(next));
  }
  return cache[static_cast<std::size_t>(k)];
}

LaurentPoly narayana_neg(int m) {
  if (m > -1) throw DomainError("narayana_neg needs m <= -1");
  return lp_subst_inverse(narayana_rec(-m - 1), Var::q).shifted(2 * static_cast<Exponent>(m) + 1, 0);
}

LaurentPoly narayana(int k) { return k >= 0 ? narayana_rec(k) : narayana_neg(k); }

LaurentPoly classic_narayana(int k) {
  if (k < 0) throw DomainError("classic_narayana needs k >= 0");
  if (k == 0) return 1;
  auto binom = [](int n, int r) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
  };
  const LaurentPoly one_plus_t = LaurentPoly(1) + LaurentPoly::t();
  LaurentPoly sum;
  for (int j = 1; j <= k; ++j) {
    Rational c(binom(k, j) * binom(k, j - 1), mpz_class(k));
    c.canonicalize();
    sum += one_plus_t.pow(static_cast<unsigned>(j)).scaled(c);
  }
  return sum;
}

LaurentPoly area_poly(int k) {
  if (k < 0) throw DomainError("area_poly needs k >= 0");
  LaurentPoly sum;
  for (const auto& p : enumerate_paths(k)) sum += LaurentPoly::q(path_stats(p).area);
  return sum;
}

}  // namespace nlab
