#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poincare/actors.hpp"
#include "poincare/int_polynomial.hpp"
#include "poincare/polynomial_gcd.hpp"
#include "poincare/report.hpp"

namespace poincare {

/// (1 + sign * t^exponent)^power. power is +1 for a factor of r_n and -1 for
/// the factor 1 + t^{s-1} removed when 4 | n.
struct DenominatorFactor {
  int sign = -1;
  int exponent = 1;
  int power = 1;

  [[nodiscard]] IntPolynomial polynomial() const {
    return IntPolynomial::binomial(sign, static_cast<std::size_t>(exponent));
  }

  [[nodiscard]] std::string to_string() const {
    std::string body = std::string("1") + (sign < 0 ? "-" : "+") + "t";
    if (exponent != 1) body += "^" + std::to_string(exponent);
    return power < 0 ? "/(" + body + ")" : "(" + body + ")";
  }

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// Factored description of B_n: the factors of r_n, then the removed
/// 1 + t^{s-1} when n = 0 mod 4.
inline std::vector<DenominatorFactor> denominator_factors(const Parameters& params) {
  std::vector<DenominatorFactor> out;
  if (params.odd()) {
    for (int i = 2; i <= params.n - 1; ++i) out.push_back({-1, 2 * i, 1});
  } else {
    out.push_back({+1, 1, 1});
    for (int i = 2; i <= params.n - 1; ++i) out.push_back({-1, i, 1});
    if (params.parity == Parity::Even4) out.push_back({+1, params.s - 1, -1});
  }
  return out;
}

inline std::string format_factors(const std::vector<DenominatorFactor>& factors) {
  std::string out;
  for (const auto& f : factors) out += f.to_string();
  return out;
}

/// A conjectured exact division left a remainder.
class InexactDivision : public std::runtime_error {
public:
  InexactDivision(std::string what_divided, IntPolynomial remainder)
      : std::runtime_error("inexact division: " + what_divided + ", remainder " + remainder.to_string()),
        remainder_(std::move(remainder)) {}
  [[nodiscard]] const IntPolynomial& remainder() const noexcept { return remainder_; }

private:
  IntPolynomial remainder_;
};

/// Expands a factor list; removed factors must divide exactly.
inline IntPolynomial expand_factors(const std::vector<DenominatorFactor>& factors) {
  IntPolynomial acc{1};
  for (const auto& f : factors) {
    if (f.power > 0) {
      for (int k = 0; k < f.power; ++k) acc.multiply_binomial(f.sign, static_cast<std::size_t>(f.exponent));
    }
  }
  for (const auto& f : factors) {
    for (int k = 0; k < -f.power; ++k) {
      auto [q, r] = divide(acc, f.polynomial());
      if (!r.is_zero()) throw InexactDivision("denominator by " + f.to_string(), r);
      acc = std::move(q);
    }
  }
  return acc;
}

/// P_n(t) = A(t) / B(t) in lowest terms.
struct PoincareRational {
  Parameters params;
  IntPolynomial numerator;    // A_n
  IntPolynomial denominator;  // B_n
  std::vector<DenominatorFactor> factors;
};

namespace detail {

inline IntPolynomial divide_checked(const IntPolynomial& a, const IntPolynomial& b, const std::string& label) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw InexactDivision(label, r);
  if (q * b != a) throw std::logic_error("division round trip failed: " + label);
  return q;
}

}  // namespace detail

/// Builds A_n and B_n from alpha_0 and r_n:
///   odd:   A = alpha_0,                          B = r_n
///   even2: A = alpha_0 / (1-t),                  B = r_n
///   even4: A = alpha_0 / ((1-t)(1+t^{s-1})),     B = r_n / (1+t^{s-1})
/// The (1-t) division runs first. Every division is checked for a zero
/// remainder and re-multiplied.
inline PoincareRational assemble(const Parameters& params, const IntPolynomial& alpha, const IntPolynomial& r) {
  PoincareRational out;
  out.params = params;
  out.factors = denominator_factors(params);
  if (params.odd()) {
    out.numerator = alpha;
    out.denominator = r;
  } else {
    auto bar = detail::divide_checked(alpha, IntPolynomial::binomial(-1, 1), "alpha_0 by (1-t)");
    if (params.parity == Parity::Even2) {
      out.numerator = std::move(bar);
      out.denominator = r;
    } else {
      const auto removed = IntPolynomial::binomial(+1, static_cast<std::size_t>(params.s - 1));
      const std::string label = "(1+t^" + std::to_string(params.s - 1) + ")";
      out.numerator = detail::divide_checked(bar, removed, "alpha_0/(1-t) by " + label);
      out.denominator = detail::divide_checked(r, removed, "r_n by " + label);
    }
  }
  return out;
}

struct CoefficientTable {
  int n = 0;
  int delta = 0;
  std::vector<BigInt> half;  // c_0 .. c_delta

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// [c_0 .. c_delta] of a palindromic numerator of degree 2*delta.
inline CoefficientTable half_table(const PoincareRational& series) {
  const auto& a = series.numerator;
  if (a.degree() < 0 || a.degree() % 2 != 0 || !a.is_symmetric(1)) {
    throw std::logic_error("numerator of P_" + std::to_string(series.params.n) + " is not an even palindrome");
  }
  CoefficientTable t;
  t.n = series.params.n;
  t.delta = static_cast<int>(a.degree() / 2);
  t.half.assign(a.coefficients().begin(), a.coefficients().begin() + t.delta + 1);
  return t;
}

/// Palindromic reflection of a half table back to the full numerator.
inline IntPolynomial numerator_from_half(const std::vector<BigInt>& half) {
  if (half.empty()) return {};
  const std::size_t delta = half.size() - 1;
  std::vector<BigInt> c(2 * delta + 1);
  for (std::size_t i = 0; i <= delta; ++i) c[i] = c[2 * delta - i] = half[i];
  return IntPolynomial(std::move(c));
}

/// P_n reconstructed from a half table and the closed-form denominator.
inline PoincareRational series_from_half(const Parameters& params, const std::vector<BigInt>& half) {
  PoincareRational out;
  out.params = params;
  out.numerator = numerator_from_half(half);
  out.factors = denominator_factors(params);
  out.denominator = expand_factors(out.factors);
  return out;
}

/// Multiplicity of t = 1 as a root.
inline int multiplicity_at_one(IntPolynomial p) {
  if (p.is_zero()) throw std::domain_error("multiplicity of zero polynomial");
  int k = 0;
  const auto one_minus_t = IntPolynomial::binomial(-1, 1);
  while (p.evaluate(1) == 0) {
    p = divide(p, one_minus_t).quotient;
    ++k;
  }
  return k;
}

/// All structural properties expected of P_n. Nonnegativity of c_4, c_8,
/// c_6 (n >= 15), c_10 (n >= 9) for odd n is reported at Soft severity.
inline CheckReport structural_checks(const PoincareRational& series) {
  const auto& params = series.params;
  const auto& a = series.numerator;
  const auto& b = series.denominator;
  CheckReport report;

  report.add("A(0) = 1", a.coefficient(0) == 1, "A(0) = " + a.coefficient(0).str());
  report.add("B(0) = 1", b.coefficient(0) == 1, "B(0) = " + b.coefficient(0).str());
  report.add("A palindromic", a.is_symmetric(1));
  report.add("deg A = 2*delta", a.degree() == 2L * params.delta,
             "deg A = " + std::to_string(a.degree()) + ", 2*delta = " + std::to_string(2 * params.delta));

  bool factors_ok = false;
  try {
    factors_ok = expand_factors(series.factors) == b;
  } catch (const InexactDivision&) {
  }
  report.add("factored denominator expands to B", factors_ok, format_factors(series.factors));

  report.add("deg A - deg B = -(n+1)", a.degree() - b.degree() == -(params.n + 1L),
             std::to_string(a.degree()) + " - " + std::to_string(b.degree()) + " = " +
                 std::to_string(a.degree() - b.degree()));

  const int pole = b.is_zero() ? -1 : multiplicity_at_one(b);
  const BigInt a1 = a.evaluate(1);
  report.add("pole order at t=1 is n-2", pole == params.n - 2 && a1 != 0,
             "(1-t)-multiplicity of B = " + std::to_string(pole) + ", A(1) = " + a1.str());

  report.add("gcd(A, B) = 1", coprime_over_q(a, b));

  if (params.odd()) {
    std::string bad;
    for (long i = 1; i <= a.degree(); i += 2) {
      if (a.coefficient(static_cast<std::size_t>(i)) != 0) {
        bad = "c_" + std::to_string(i) + " = " + a.coefficient(static_cast<std::size_t>(i)).str();
        break;
      }
    }
    if (bad.empty() && a.coefficient(2) != 0) bad = "c_2 = " + a.coefficient(2).str();
    report.add("c_i = 0 for odd i and i = 2", bad.empty(), bad);

    const BigInt expected = (params.n - 3) / 6;
    report.add("c_4 = floor((n-3)/6)", a.coefficient(4) == expected,
               "c_4 = " + a.coefficient(4).str() + ", expected " + expected.str());
    auto soft_nonneg = [&](int i, bool applies) {
      if (!applies || 2L * params.delta < i) return;
      report.add("c_" + std::to_string(i) + " >= 0", a.coefficient(static_cast<std::size_t>(i)) >= 0,
                 "c_" + std::to_string(i) + " = " + a.coefficient(static_cast<std::size_t>(i)).str(), Severity::Soft);
    };
    soft_nonneg(4, true);
    soft_nonneg(8, true);
    soft_nonneg(6, params.n >= 15);
    soft_nonneg(10, params.n >= 9);
  }
  return report;
}

}  // namespace poincare
