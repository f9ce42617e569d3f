#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace poincare {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. Index i holds the coefficient of t^i. The coefficient
/// vector is kept canonical: no trailing zeros, the zero polynomial is empty.
class IntPolynomial {
public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }

  IntPolynomial(std::initializer_list<long long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial constant(BigInt c) {
    return IntPolynomial(std::vector<BigInt>{std::move(c)});
  }

  /// 1 + sign * t^exponent
  static IntPolynomial binomial(int sign, std::size_t exponent) {
    std::vector<BigInt> c(exponent + 1);
    c[0] += 1;
    c[exponent] += sign;
    return IntPolynomial(std::move(c));
  }

  static IntPolynomial monomial(BigInt c, std::size_t exponent) {
    std::vector<BigInt> v(exponent + 1);
    v[exponent] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept {
    return static_cast<long>(coeffs_.size()) - 1;
  }

  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^i (zero past the end).
  [[nodiscard]] BigInt coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept {
    return coeffs_;
  }

  [[nodiscard]] const BigInt& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  [[nodiscard]] BigInt evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// Residues of the coefficients in [0, modulus).
  [[nodiscard]] std::vector<std::uint64_t> reduce_mod(std::uint64_t modulus) const {
    std::vector<std::uint64_t> out(coeffs_.size());
    const BigInt m = modulus;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      BigInt r = coeffs_[i] % m;
      if (r < 0) r += m;
      out[i] = static_cast<std::uint64_t>(r);
    }
    return out;
  }

  /// True when c_{deg-k} = sign * c_k for all k.
  [[nodiscard]] bool is_symmetric(int sign) const {
    const std::size_t n = coeffs_.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (coeffs_[n - 1 - k] != coeffs_[k] * sign) return false;
    }
    return true;
  }

  IntPolynomial& operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator*=(const BigInt& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= BigInt(-1); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b.coeffs_[j] != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntPolynomial(std::move(out));
  }

  IntPolynomial& operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

  /// Multiply in place by (1 + sign * t^exponent) without a general product.
  void multiply_binomial(int sign, std::size_t exponent) {
    if (is_zero()) return;
    const std::size_t old = coeffs_.size();
    coeffs_.resize(old + exponent);
    for (std::size_t i = old; i-- > 0;) {
      if (coeffs_[i] != 0) coeffs_[i + exponent] += coeffs_[i] * sign;
    }
    trim();
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  [[nodiscard]] std::string to_string(char var = 't') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += mag.str();
      if (i > 0) {
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division of a by b over Z. Requires lc(b) = +-1 so the quotient
/// stays integral.
inline DivisionResult divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const BigInt& lc = b.leading();
  if (lc != 1 && lc != -1) {
    throw std::domain_error("divisor must have leading coefficient +-1");
  }
  if (a.degree() < b.degree()) return {IntPolynomial{}, a};
  std::vector<BigInt> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> quo(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    BigInt q = lc == 1 ? rem[i] : BigInt(-rem[i]);
    const std::size_t shift = i - db;
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] != 0) rem[shift + j] -= q * bc[j];
    }
    quo[shift] = std::move(q);
  }
  rem.resize(db);
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

/// Quotient a/b when exact, nullopt otherwise.
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) return std::nullopt;
  return std::move(q);
}

/// Decimal rendering of an integer sequence as "[c0,c1,...]".
inline std::string format_list(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].str();
  }
  out += "]";
  return out;
}

}  // namespace poincare
