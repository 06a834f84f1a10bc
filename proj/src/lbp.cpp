#include "narayana_lab/lbp.hpp"

#include <string>

#include "narayana_lab/dets.hpp"
#include "narayana_lab/errors.hpp"
#include "narayana_lab/limits.hpp"
#include "narayana_lab/paths.hpp"

namespace nlab {

namespace {

LaurentPoly sign_pow(int e) { return e % 2 == 0 ? LaurentPoly(1) : LaurentPoly(-1); }

void require_nonzero(const LaurentPoly& v, const char* name, int n) {
  if (v.is_zero()) {
    throw ZeroCoefficient(std::string(name) + "_" + std::to_string(n) + " is zero; the recurrence degenerates");
  }
}

// Shared three-term recurrence for P (start 1, z - c_0) and Q (start 0, kappa).
std::vector<ZPoly> run_recurrence(const CoefficientSeq& cs, int N, ZPoly first, ZPoly second) {
  if (N < 0) throw DomainError("recurrence length must be nonnegative");
  std::vector<ZPoly> out{std::move(first)};
  if (N >= 1) out.push_back(std::move(second));
  for (int n = 1; n < N; ++n) {
    const LaurentPoly c = cs.c(n);
    const LaurentPoly b = cs.b(n);
    require_nonzero(c, "c", n);
    require_nonzero(b, "b", n);
    const ZPoly shift{-c, 1};
    out.push_back(shift * out[static_cast<std::size_t>(n)] -
                  b * out[static_cast<std::size_t>(n - 1)].times_z());
  }
  return out;
}

}  // namespace

MomentTable::MomentTable(int kmin, std::vector<LaurentPoly> values) : kmin_(kmin), values_(std::move(values)) {}

const LaurentPoly& MomentTable::at(int k) const {
  if (!contains(k)) {
    throw WindowExceeded("moment f_" + std::to_string(k) + " lies outside the computed window [" +
                         std::to_string(kmin()) + ", " + std::to_string(kmax()) + "]");
  }
  return values_[static_cast<std::size_t>(k - kmin_)];
}

LaurentPoly moment(const CoefficientSeq& cs, int k) {
  if (k >= 1) return cs.kappa() * path_sum(k - 1, cs);
  const CoefficientSeq dual = dual_coeffs(cs);
  return dual.kappa() * path_sum(-k, dual);
}

MomentTable moments(const CoefficientSeq& cs, int kmin, int kmax) {
  if (kmin > kmax) throw DomainError("moment window is empty");
  if (-kmin > limits::kMaxMomentIndex || kmax - 1 > limits::kMaxMomentIndex) {
    throw SizeLimitExceeded("moment window exceeds |k| <= " + std::to_string(limits::kMaxMomentIndex));
  }
  std::vector<LaurentPoly> values;
  values.reserve(static_cast<std::size_t>(kmax - kmin + 1));
  std::optional<CoefficientSeq> dual;
  for (int k = kmin; k <= kmax; ++k) {
    if (k >= 1) {
      values.push_back(cs.kappa() * path_sum(k - 1, cs));
    } else {
      if (!dual) dual = dual_coeffs(cs);
      values.push_back(dual->kappa() * path_sum(-k, *dual));
    }
  }
  return {kmin, std::move(values)};
}

std::vector<ZPoly> lbp_sequence(const CoefficientSeq& cs, int N) {
  if (N >= 1) require_nonzero(cs.c(0), "c", 0);
  return run_recurrence(cs, N, ZPoly{1}, N >= 1 ? ZPoly{-cs.c(0), 1} : ZPoly{});
}

std::vector<ZPoly> lbp_numerators(const CoefficientSeq& cs, int N) {
  if (N >= 1) require_nonzero(cs.c(0), "c", 0);
  return run_recurrence(cs, N, ZPoly{}, ZPoly{cs.kappa()});
}

CoefficientSeq dual_coeffs(const CoefficientSeq& cs) {
  const LaurentPoly c0 = cs.c(0);
  if (c0.is_zero()) throw DivisionByZero("dual coefficients need c_0 != 0");
  auto b = [cs](int n) { return lp_exact_div(cs.b(n), cs.c(n - 1) * cs.c(n)); };
  auto c = [cs](int n) { return lp_exact_div(LaurentPoly(1), cs.c(n)); };
  const std::string name = cs.name().empty() ? "dual" : "dual(" + cs.name() + ")";
  return {b, c, lp_exact_div(cs.kappa(), c0), name};
}

ZPoly invert_lbp(const ZPoly& p) {
  if (p.is_zero()) throw DivisionByZero("cannot invert the zero polynomial");
  const LaurentPoly p0 = p.constant_term();
  if (p0.is_zero()) throw DivisionByZero("P(0) = 0; the inverted polynomial is undefined");
  const LaurentPoly inv = lp_unit_inverse(p0);
  std::vector<LaurentPoly> reversed(p.coeffs().rbegin(), p.coeffs().rend());
  for (auto& c : reversed) c = c * inv;
  return ZPoly(std::move(reversed));
}

LaurentPoly functional_apply(const MomentTable& f, const ZPoly& expr, int shift) {
  LaurentPoly sum;
  for (int i = 0; i < static_cast<int>(expr.coeffs().size()); ++i) {
    const LaurentPoly& c = expr.coeff(i);
    if (c.is_zero()) continue;
    sum += c * f.at(i + shift);
  }
  return sum;
}

LBPSystem LBPSystem::build(const CoefficientSeq& cs, int N, int kmin, int kmax) {
  return {cs, lbp_sequence(cs, N), lbp_numerators(cs, N), nlab::moments(cs, kmin, kmax)};
}

LBPSystem LBPSystem::build(const CoefficientSeq& cs, int N) { return build(cs, N, -(N + 1), N + 2); }

Report orthogonality_check(const LBPSystem& sys, int N) {
  if (N >= static_cast<int>(sys.P.size())) throw DomainError("system holds fewer polynomials than requested");
  Report report;
  for (int n = 0; n <= N; ++n) {
    const ZPoly& p = sys.P[static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k) {
      report.push_back(make_check("orthogonality", n, k, functional_apply(sys.moments, p, -k), LaurentPoly{}));
    }
    const LaurentPoly h = functional_apply(sys.moments, p, -n);
    const LaurentPoly lower = toeplitz_det(sys.moments, 0, n);
    const LaurentPoly upper = toeplitz_det(sys.moments, 0, n + 1);
    CheckEntry entry = make_check("orthogonality_h", n, n, h * lower, upper);
    entry.pass = entry.pass && !h.is_zero();
    report.push_back(std::move(entry));
  }
  return report;
}

Report pade_check(const LBPSystem& sys, int n, int extra) {
  if (n < 0 || extra < 0) throw DomainError("pade_check needs n >= 0 and extra >= 0");
  if (n >= static_cast<int>(sys.P.size())) throw DomainError("system holds fewer polynomials than requested");
  const ZPoly& p = sys.P[static_cast<std::size_t>(n)];
  const ZPoly& q = sys.Q[static_cast<std::size_t>(n)];
  const int order = n + extra;
  const FormalSeries at_inf = series_expand(q, p, SeriesPoint::infinity, order);
  const FormalSeries at_zero = series_expand(q, p, SeriesPoint::zero, order);

  Report report;
  for (int j = 1; j <= n; ++j) {
    report.push_back(make_check("pade_infinity", n, j, at_inf.at(-j), sys.moments.at(j)));
  }
  for (int j = 0; j < n; ++j) {
    report.push_back(make_check("pade_zero", n, j, at_zero.at(j), -sys.moments.at(-j)));
  }

  // First mismatch orders; 0 records "none within the computed range".
  CheckEntry inf_first{"pade_infinity_first_mismatch", n, 0, true, {}, {}};
  for (int j = 1; j <= order; ++j) {
    if (!sys.moments.contains(j)) break;
    if (at_inf.at(-j) != sys.moments.at(j)) {
      inf_first = {"pade_infinity_first_mismatch", n, j, j > n, at_inf.at(-j), sys.moments.at(j)};
      break;
    }
  }
  CheckEntry zero_first{"pade_zero_first_mismatch", n, 0, true, {}, {}};
  for (int j = 0; j <= order; ++j) {
    if (!sys.moments.contains(-j)) break;
    if (at_zero.at(j) != -sys.moments.at(-j)) {
      zero_first = {"pade_zero_first_mismatch", n, j, j >= n, at_zero.at(j), -sys.moments.at(-j)};
      break;
    }
  }
  report.push_back(std::move(inf_first));
  report.push_back(std::move(zero_first));
  return report;
}

Report generalized_moment_check(const LBPSystem& sys, int nmax, int kmax) {
  if (nmax + 1 >= static_cast<int>(sys.P.size())) {
    throw DomainError("generalized_moment_check needs P up to degree nmax + 1");
  }
  const CoefficientSeq& cs = sys.cs;
  auto f = [&sys](int n, int k) -> LaurentPoly {
    if (n < 0) return {};
    return functional_apply(sys.moments, sys.P[static_cast<std::size_t>(n)], k + 1);
  };
  const LaurentPoly kappa_dual = lp_exact_div(cs.kappa(), cs.c(0));

  Report report;
  for (int n = 0; n <= nmax + 1; ++n) {
    report.push_back(make_check("genmom_boundary", n, -1, f(n, -1), n == 0 ? kappa_dual : LaurentPoly{}));
  }
  for (int n = 0; n <= nmax; ++n) {
    for (int k = 0; k <= kmax; ++k) {
      LaurentPoly rhs = f(n + 1, k - 1) + cs.c(n) * f(n, k - 1);
      if (n >= 1) rhs += cs.b(n) * f(n - 1, k);
      report.push_back(make_check("genmom_recurrence", n, k, f(n, k), rhs));
    }
  }
  return report;
}

Report tfrac_series_check(const CoefficientSeq& cs, int order, int n) {
  if (order < 0) throw DomainError("tfrac_series_check needs order >= 0");
  if (n <= order) throw DomainError("tfrac_series_check needs n > order");
  const auto P = lbp_sequence(cs, n);
  const auto Q = lbp_numerators(cs, n);
  const FormalSeries at_inf = series_expand(Q.back(), P.back(), SeriesPoint::infinity, order + 1);
  const FormalSeries at_zero = series_expand(Q.back(), P.back(), SeriesPoint::zero, order);
  const CoefficientSeq dual = dual_coeffs(cs);

  Report report;
  for (int j = 0; j <= order; ++j) {
    LaurentPoly primal;
    LaurentPoly tilde;
    bool lengths_ok = true;
    for (const auto& path : enumerate_paths(j)) {
      lengths_ok = lengths_ok && path_stats(path).length == j;
      primal += path_weight(path, cs);
      tilde += path_weight(path, dual);
    }
    CheckEntry inf = make_check("tfrac_infinity", n, j, at_inf.at(-(j + 1)), cs.kappa() * primal);
    inf.pass = inf.pass && lengths_ok;
    report.push_back(std::move(inf));
    report.push_back(make_check("tfrac_zero", n, j, at_zero.at(j), -(dual.kappa() * tilde)));
  }
  return report;
}

ZPoly lbp_determinant_form(const LBPSystem& sys, int n) {
  if (n < 0) throw DomainError("lbp_determinant_form needs n >= 0");
  if (n == 0) return ZPoly{1};
  // Rows j = 0..n-1 hold f_(k-j) for k = 0..n; expand along the (1, z, ..)
  // row, whose cofactor for z^n is Delta^(0)_n itself.
  std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(n) + 1);
  LaurentPoly delta;
  for (int col = 0; col <= n; ++col) {
    Matrix minor(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k <= n; ++k) {
        if (k == col) continue;
        minor[static_cast<std::size_t>(j)].push_back(sys.moments.at(k - j));
      }
    }
    const LaurentPoly m = determinant(minor);
    coeffs[static_cast<std::size_t>(col)] = sign_pow(n + col) * m;
    if (col == n) delta = m;
  }
  if (delta.is_zero()) throw DivisionByZero("Delta^(0)_n vanishes");
  for (auto& c : coeffs) c = lp_exact_div(c, delta);
  return ZPoly(std::move(coeffs));
}

std::pair<ZPoly, ZPoly> tfraction_convergent(const CoefficientSeq& cs, int n) {
  if (n < 0) throw DomainError("convergent index must be nonnegative");
  if (n == 0) return {ZPoly{}, ZPoly{1}};
  // tail_j = z - c_j - b_(j+1) z / tail_(j+1), kept as num/den.
  ZPoly num{-cs.c(n - 1), 1};
  ZPoly den{1};
  for (int j = n - 2; j >= 0; --j) {
    ZPoly next_num = ZPoly{-cs.c(j), 1} * num - cs.b(j + 1) * den.times_z();
    den = std::move(num);
    num = std::move(next_num);
  }
  return {cs.kappa() * den, num};
}

Report convergent_check(const CoefficientSeq& cs, int nmax) {
  const auto P = lbp_sequence(cs, nmax);
  const auto Q = lbp_numerators(cs, nmax);
  Report report;
  for (int n = 0; n <= nmax; ++n) {
    const auto [num, den] = tfraction_convergent(cs, n);
    const ZPoly lhs = num * P[static_cast<std::size_t>(n)];
    const ZPoly rhs = Q[static_cast<std::size_t>(n)] * den;
    const int top = std::max(lhs.degree().value_or(0), rhs.degree().value_or(0));
    for (int i = 0; i <= top; ++i) report.push_back(make_check("convergent", n, i, lhs.coeff(i), rhs.coeff(i)));
  }
  return report;
}

Report constant_term_check(const CoefficientSeq& cs, int nmax) {
  const auto P = lbp_sequence(cs, nmax);
  Report report;
  LaurentPoly product = 1;
  for (int n = 0; n <= nmax; ++n) {
    report.push_back(make_check("constant_term", n, 0, P[static_cast<std::size_t>(n)].constant_term(),
                                sign_pow(n) * product));
    product *= cs.c(n);
  }
  return report;
}

Report inverted_recurrence_check(const CoefficientSeq& cs, int nmax) {
  const auto P = lbp_sequence(cs, nmax);
  const auto dual = lbp_sequence(dual_coeffs(cs), nmax);
  Report report;
  for (int n = 0; n <= nmax; ++n) {
    const ZPoly inverted = invert_lbp(P[static_cast<std::size_t>(n)]);
    const ZPoly& expected = dual[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      report.push_back(make_check("inverted_recurrence", n, i, inverted.coeff(i), expected.coeff(i)));
    }
  }
  return report;
}

Report moment_duality_check(const CoefficientSeq& cs, int kmax) {
  const MomentTable f = moments(cs, 1 - kmax, kmax + 1);
  const MomentTable dual = moments(dual_coeffs(cs), -kmax, kmax);
  Report report;
  for (int k = -kmax; k <= kmax; ++k) report.push_back(make_check("moment_duality", 0, k, dual.at(k), f.at(1 - k)));
  return report;
}

}  // namespace nlab
