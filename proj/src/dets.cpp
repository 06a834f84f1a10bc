#include "narayana_lab/dets.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "narayana_lab/errors.hpp"
#include "narayana_lab/limits.hpp"
#include "narayana_lab/qnarayana.hpp"

namespace nlab {

namespace {

LaurentPoly sign_pow(long e) { return e % 2 == 0 ? LaurentPoly(1) : LaurentPoly(-1); }

void require_order(std::size_t n) {
  if (n > static_cast<std::size_t>(limits::kMaxDeterminantOrder)) {
    throw SizeLimitExceeded("determinant order " + std::to_string(n) + " exceeds " +
                            std::to_string(limits::kMaxDeterminantOrder));
  }
}

// D(S) = det of the last |S| rows restricted to the columns in S, expanded
// along its first row. Masks are visited in increasing order, so every
// D(S \ {c}) is ready when D(S) is formed.
LaurentPoly det_minors(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<LaurentPoly> d(std::size_t{1} << n);
  d[0] = 1;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    LaurentPoly acc;
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      const LaurentPoly& a = m[row][c];
      const LaurentPoly& rest = d[mask & ~(1U << c)];
      if (!a.is_zero() && !rest.is_zero()) {
        if (pos % 2 == 0) {
          acc += a * rest;
        } else {
          acc -= a * rest;
        }
      }
      ++pos;
    }
    d[mask] = std::move(acc);
  }
  return d.back();
}

LaurentPoly det_bareiss(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  LaurentPoly prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return {};
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = lp_exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = LaurentPoly{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly t_plus_q(Exponent e) { return LaurentPoly::t() + LaurentPoly::q(e); }

long tri(long n) { return n * (n - 1) / 2; }

}  // namespace

LaurentPoly determinant(const Matrix& m, DetAlgorithm alg) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DomainError("determinant needs a square matrix");
  }
  require_order(m.size());
  return alg == DetAlgorithm::minors ? det_minors(m) : det_bareiss(m);
}

Matrix toeplitz_matrix(const MomentTable& f, int s, int n) {
  if (n < 0) throw DomainError("determinant order must be nonnegative");
  require_order(static_cast<std::size_t>(n));
  Matrix m(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(j)].push_back(f.at(s - j + k));
  }
  return m;
}

LaurentPoly toeplitz_det(const MomentTable& f, int s, int n, DetAlgorithm alg) {
  return determinant(toeplitz_matrix(f, s, n), alg);
}

LaurentPoly det_closed_cfs(const CoefficientSeq& cs, int s, int n) {
  if (n < 0) throw DomainError("determinant order must be nonnegative");
  if (s != 0 && s != 1) throw DomainError("closed coefficient form exists only for s in {0, 1}");
  // Delta^(0)_n is the transpose of the dual system's Delta^(1)_n.
  const CoefficientSeq src = s == 1 ? cs : dual_coeffs(cs);
  LaurentPoly out = sign_pow(tri(n)) * src.kappa().pow(static_cast<unsigned>(n));
  for (int k = 1; k < n; ++k) {
    out *= lp_exact_div(src.b(k), src.c(k - 1)).pow(static_cast<unsigned>(n - k));
  }
  return out;
}

Report det_ratio_check(const CoefficientSeq& cs, int nmax) {
  const MomentTable f = moments(cs, -nmax, nmax + 1);
  auto d0 = [&f](int n) { return n < 0 ? LaurentPoly{} : toeplitz_det(f, 0, n); };
  auto d1 = [&f](int n) { return toeplitz_det(f, 1, n); };
  Report report;
  for (int n = 0; n <= nmax; ++n) {
    if (n >= 1) {
      report.push_back(make_check("ratio_b", n, 0, cs.b(n) * d1(n) * d0(n), -(d1(n + 1) * d0(n - 1))));
    }
    report.push_back(make_check("ratio_c", n, 0, cs.c(n) * d1(n) * d0(n + 1), d1(n + 1) * d0(n)));
  }
  return report;
}

LaurentPoly narayana_det(int s, int n, DetAlgorithm alg) {
  if (n < 0) throw DomainError("determinant order must be nonnegative");
  require_order(static_cast<std::size_t>(n));
  if (std::abs(s) + n > limits::kMaxMomentIndex) {
    throw SizeLimitExceeded("Narayana indices beyond " + std::to_string(limits::kMaxMomentIndex));
  }
  Matrix m(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(j)].push_back(narayana(s + j - k - 1));
  }
  return determinant(m, alg);
}

LaurentPoly det_band_closed(int s, int n) {
  if (n < 0) throw DomainError("determinant order must be nonnegative");
  const Exponent e = tri(n);
  if (s == 1) return sign_pow(e) * LaurentPoly::monomial(-e, e);
  if (s == 0) return sign_pow(e) * LaurentPoly::monomial(-static_cast<Exponent>(n) * (n + 1) / 2, -e);
  throw DomainError("the closed band covers s in {0, 1} only");
}

LaurentPoly det_closed(int s, int n) {
  if (n < 0) throw DomainError("determinant order must be nonnegative");
  if (s < -n || s > n + 1) {
    throw DomainError("closed form needs -n <= s <= n + 1 (got s = " + std::to_string(s) +
                      ", n = " + std::to_string(n) + ")");
  }
  const long d = n - s;
  LaurentPoly out = sign_pow(tri(n)) * LaurentPoly::monomial(-d * (d + 1) / 2, tri(n) * (2L * s - 1));
  if (s >= 1) {
    for (int k = 1; k <= s - 1; ++k) out *= t_plus_q(2 * k - 1).pow(static_cast<unsigned>(s - k));
  } else {
    const int a = -s;
    for (int k = 1; k <= a; ++k) out *= t_plus_q(-2 * k + 1).pow(static_cast<unsigned>(a - k + 1));
  }
  return out;
}

DetTable DetTable::band_seeded() {
  return DetTable([](int s, int n) -> std::optional<LaurentPoly> {
    if ((s == 0 || s == 1) && n >= 0) return det_band_closed(s, n);
    return std::nullopt;
  });
}

std::optional<LaurentPoly> DetTable::find(int s, int n) const {
  if (n == 0) return LaurentPoly(1);
  if (n == -1) return LaurentPoly{};
  if (auto it = entries_.find({s, n}); it != entries_.end()) return it->second;
  if (seed_) return seed_(s, n);
  return std::nullopt;
}

void DetTable::set(int s, int n, LaurentPoly value) { entries_[{s, n}] = std::move(value); }

LaurentPoly sylvester_extend(DetTable& table, int s, int n) {
  if (n < -1) throw DomainError("table order must be at least -1");
  if (std::abs(s) + n > limits::kMaxSylvesterSpan) {
    throw SizeLimitExceeded("no table route for (s, n) = (" + std::to_string(s) + ", " + std::to_string(n) +
                            "): |s| + n exceeds " + std::to_string(limits::kMaxSylvesterSpan));
  }
  if (auto hit = table.find(s, n)) return *hit;
  if (s == 0 || s == 1) throw DomainError("the seed band has no entry for n = " + std::to_string(n));

  // Solve the identity centred one step closer to the band.
  const int dir = s >= 2 ? -1 : 1;
  const int near = s + dir;
  const int far = s + 2 * dir;
  const LaurentPoly divisor = sylvester_extend(table, far, n);
  if (divisor.is_zero()) {
    throw DivisionByZero("N^(" + std::to_string(far) + ")_" + std::to_string(n) +
                         " vanishes; the identity cannot be solved for (" + std::to_string(s) + ", " +
                         std::to_string(n) + ")");
  }
  const LaurentPoly mid = sylvester_extend(table, near, n);
  const LaurentPoly above = sylvester_extend(table, near, n + 1);
  const LaurentPoly below = sylvester_extend(table, near, n - 1);
  LaurentPoly value = lp_exact_div(mid * mid - above * below, divisor);
  table.set(s, n, value);
  return value;
}

Report sylvester_identity_check(const DetTable& table) {
  Report report;
  for (const auto& [key, value] : table.entries()) {
    const auto [s, n] = key;
    const auto up = table.find(s, n + 1);
    const auto down = table.find(s, n - 1);
    const auto right = table.find(s + 1, n);
    const auto left = table.find(s - 1, n);
    if (!up || !down || !right || !left) continue;
    report.push_back(make_check("sylvester", n, s, *up * *down + *right * *left, value * value));
  }
  return report;
}

LaurentPoly qbinom(int m, int n) {
  if (n < 0 || n > m) throw DomainError("qbinom needs 0 <= n <= m");
  // row[j] holds [r, j]_q for the current r.
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int r = 1; r <= m; ++r) {
    std::vector<LaurentPoly> next(static_cast<std::size_t>(r) + 1);
    next[0] = 1;
    next[static_cast<std::size_t>(r)] = 1;
    for (int j = 1; j < r; ++j) {
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + LaurentPoly::q(j) * row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

LaurentPoly qbinom_product(int m, int n) {
  if (n < 0 || n > m) throw DomainError("qbinom needs 0 <= n <= m");
  LaurentPoly acc = 1;
  for (int k = 1; k <= n; ++k) {
    acc = lp_exact_div(acc * (LaurentPoly(1) - LaurentPoly::q(m - k + 1)), LaurentPoly(1) - LaurentPoly::q(k));
  }
  return acc;
}

LaurentPoly det_s_np2(int n) {
  if (n < 0) throw DomainError("det_s_np2 needs n >= 0");
  const long nn = n;
  LaurentPoly out = sign_pow(tri(n)) * LaurentPoly::q(nn * (nn - 1) * (2 * nn + 3) / 2);
  for (int k = 1; k <= n; ++k) out *= t_plus_q(2 * k - 1).pow(static_cast<unsigned>(n - k + 1));
  LaurentPoly sum;
  for (int l = 0; l <= n; ++l) {
    sum += LaurentPoly::monomial(n - l, static_cast<Exponent>(l) * l) * lp_subst_power(qbinom(n + 1, l), Var::q, 2);
  }
  return out * sum;
}

}  // namespace nlab
