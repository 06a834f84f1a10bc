#include "narayana_lab/coeffs.hpp"

#include <array>
#include <memory>
#include <random>

#include "narayana_lab/errors.hpp"

namespace nlab {

CoefficientSeq::CoefficientSeq(Source b, Source c, LaurentPoly kappa, std::string name)
    : b_(std::move(b)), c_(std::move(c)), kappa_(std::move(kappa)), name_(std::move(name)) {}

LaurentPoly CoefficientSeq::b(int n) const {
  if (n < 1) throw UndefinedCoefficient("b_" + std::to_string(n) + " is not defined (b starts at index 1)");
  return b_(n);
}

LaurentPoly CoefficientSeq::c(int n) const {
  if (n < 0) throw UndefinedCoefficient("c_" + std::to_string(n) + " is not defined (c starts at index 0)");
  return c_(n);
}

CoefficientSeq CoefficientSeq::with_kappa(LaurentPoly kappa) const {
  CoefficientSeq out = *this;
  out.kappa_ = std::move(kappa);
  return out;
}

CoefficientSeq qnarayana_coeffs(const LaurentPoly& kappa) {
  return {[](int n) { return LaurentPoly::q(2 * n - 1); }, [](int n) { return LaurentPoly::monomial(1, 2 * n); },
          kappa, "q-narayana"};
}

CoefficientSeq tabulated_coeffs(std::vector<LaurentPoly> b_from_one, std::vector<LaurentPoly> c_from_zero,
                                LaurentPoly kappa, std::string name) {
  auto bs = std::make_shared<const std::vector<LaurentPoly>>(std::move(b_from_one));
  auto cs = std::make_shared<const std::vector<LaurentPoly>>(std::move(c_from_zero));
  const std::string label = name;
  auto b = [bs, label](int n) {
    if (n > static_cast<int>(bs->size())) {
      throw UndefinedCoefficient(label + ": b_" + std::to_string(n) + " beyond the tabulated range");
    }
    return (*bs)[static_cast<std::size_t>(n - 1)];
  };
  auto c = [cs, label](int n) {
    if (n >= static_cast<int>(cs->size())) {
      throw UndefinedCoefficient(label + ": c_" + std::to_string(n) + " beyond the tabulated range");
    }
    return (*cs)[static_cast<std::size_t>(n)];
  };
  return {b, c, std::move(kappa), std::move(name)};
}

CoefficientSeq random_rational_coeffs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  // Raw engine output keeps the sequence identical across standard libraries.
  auto draw = [&rng]() {
    long num = 0;
    while (num == 0) num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    Rational r(num, den);
    r.canonicalize();
    return LaurentPoly(r);
  };
  LaurentPoly kappa = draw();
  std::vector<LaurentPoly> b;
  std::vector<LaurentPoly> c;
  for (int i = 0; i < count; ++i) {
    b.push_back(draw());
    c.push_back(draw());
  }
  c.push_back(draw());
  return tabulated_coeffs(std::move(b), std::move(c), std::move(kappa), "random-" + std::to_string(seed));
}

namespace generic {

namespace {

constexpr Exponent kBase = 16;
constexpr int kSlots = 6;

constexpr Exponent digit_weight(int slot) {
  Exponent w = 1;
  for (int i = 0; i < slot; ++i) w *= kBase;
  return w;
}

// Balanced base-16 digits of an exponent, least significant first.
std::array<Exponent, kSlots> digits(Exponent e) {
  std::array<Exponent, kSlots> out{};
  for (int i = 0; i < kSlots; ++i) {
    Exponent r = ((e % kBase) + kBase) % kBase;
    if (r > kBase / 2 - 1) r -= kBase;
    out[static_cast<std::size_t>(i)] = r;
    e = (e - r) / kBase;
  }
  return out;
}

}  // namespace

LaurentPoly kappa() { return LaurentPoly::t(digit_weight(0)); }

LaurentPoly b(int n) {
  if (n < 1 || n > kMaxB) throw UndefinedCoefficient("generic b_" + std::to_string(n) + " is not encoded");
  return LaurentPoly::q(digit_weight(n - 1));
}

LaurentPoly c(int n) {
  if (n < 0 || n > kMaxC) throw UndefinedCoefficient("generic c_" + std::to_string(n) + " is not encoded");
  return LaurentPoly::t(digit_weight(n + 1));
}

CoefficientSeq coeffs() {
  return {[](int n) { return generic::b(n); }, [](int n) { return generic::c(n); }, kappa(), "generic"};
}

std::string decode(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto add = [&mono](const std::string& name, Exponent e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e != 1) mono += "^" + std::to_string(e);
    };
    const auto td = digits(it->mono.t);
    const auto qd = digits(it->mono.q);
    add("kappa", td[0]);
    for (int i = 1; i <= kMaxB; ++i) add("b" + std::to_string(i), qd[static_cast<std::size_t>(i - 1)]);
    for (int i = 0; i <= kMaxC; ++i) add("c" + std::to_string(i), td[static_cast<std::size_t>(i + 1)]);
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace generic

}  // namespace nlab
