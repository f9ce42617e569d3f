#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "poincare/int_polynomial.hpp"

namespace poincare {

/// Polynomial in z whose coefficients are polynomials in t: entry k is the
/// coefficient of z^k.
class BivariatePolynomial {
public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<IntPolynomial> by_z) : c_(std::move(by_z)) { trim(); }

  [[nodiscard]] long z_degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<IntPolynomial>& by_z() const noexcept { return c_; }

  [[nodiscard]] IntPolynomial z_coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : IntPolynomial{}; }

  /// Number of nonzero monomials z^i t^j.
  [[nodiscard]] std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& p : c_) {
      for (const auto& x : p.coefficients()) n += x != 0;
    }
    return n;
  }

  /// z^{shift} * self(z^{-1}, t); requires shift >= z_degree.
  [[nodiscard]] BivariatePolynomial reflect_z(std::size_t shift) const {
    std::vector<IntPolynomial> out(shift + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) out[shift - k] = c_[k];
    return BivariatePolynomial(std::move(out));
  }

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    std::vector<IntPolynomial> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.z_coefficient(k) + b.z_coefficient(k);
    return BivariatePolynomial(std::move(out));
  }

  friend BivariatePolynomial operator-(const BivariatePolynomial& a) {
    std::vector<IntPolynomial> out;
    for (const auto& p : a.c_) out.push_back(-p);
    return BivariatePolynomial(std::move(out));
  }

  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<IntPolynomial> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BivariatePolynomial(std::move(out));
  }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<IntPolynomial> c_;
};

/// The n = 5 cofactor identity phi = a q + b p, written out by hand.
struct Fixture5 {
  BivariatePolynomial phi, p, q, a, b;

  static constexpr int m = 9;

  /// The printed polynomials. With `drop_term`, the t^12 term of the
  /// constant-in-z coefficient of a is removed.
  static Fixture5 make(bool drop_term = false) {
    using P = IntPolynomial;
    auto t = [](long long c, std::size_t e) { return P::monomial(c, e); };
    const P one{1};
    const P x = P{1} - t(1, 6) + t(1, 12);  // 1 - t^6 + t^12

    // z-linear factors: 1 - t z^e and z^e - t.
    auto one_minus_tz = [&](std::size_t e) {
      std::vector<P> c(e + 1);
      c[0] = one;
      c[e] = -t(1, 1);
      return BivariatePolynomial(std::move(c));
    };
    auto z_minus_t = [&](std::size_t e) {
      std::vector<P> c(e + 1);
      c[0] = -t(1, 1);
      c[e] = one;
      return BivariatePolynomial(std::move(c));
    };

    Fixture5 f;
    f.p = one_minus_tz(1) * one_minus_tz(3) * one_minus_tz(5);
    f.q = z_minus_t(1) * z_minus_t(3) * z_minus_t(5);
    // phi = z^7 (z^2 - 1) (1 - t^4)(1 - t^6)(1 - t^8)
    const P r = P::binomial(-1, 4) * P::binomial(-1, 6) * P::binomial(-1, 8);
    {
      std::vector<P> c(10);
      c[7] = -r;
      c[9] = r;
      f.phi = BivariatePolynomial(std::move(c));
    }

    const P a0 = drop_term ? P{1} - t(1, 6) : x;
    std::vector<P> a(8);
    a[0] = a0;
    a[1] = -(t(1, 1) * (P{1} + t(1, 2) - t(1, 6)) * (P{1} - t(1, 2) - t(1, 6)));
    a[2] = t(1, 2) * (P{1} - t(1, 6) + t(1, 8));
    a[3] = -(t(1, 1) * (P{1} - t(1, 4)) * (P{1} - t(1, 6) - t(1, 8)));
    a[4] = t(1, 2) * (P{1} - t(1, 4)) * (P{1} + t(1, 2) - t(1, 8));
    a[5] = -(t(1, 5) * (P{1} - t(1, 2) + t(1, 8)));
    a[6] = t(1, 2) * (P{1} + t(1, 4) - t(1, 6)) * (P{1} - t(1, 4) - t(1, 6));
    a[7] = -(t(1, 3) * x);
    f.a = BivariatePolynomial(std::move(a));

    std::vector<P> b(8);
    b[0] = t(1, 3) * x;
    b[1] = -(t(1, 2) * (P{1} + t(1, 4) - t(1, 6)) * (P{1} - t(1, 4) - t(1, 6)));
    b[2] = t(1, 5) * (P{1} - t(1, 2) + t(1, 8));
    b[3] = -(t(1, 2) * (P{1} - t(1, 4)) * (P{1} + t(1, 2) - t(1, 8)));
    b[4] = t(1, 1) * (P{1} - t(1, 4)) * (P{1} - t(1, 6) - t(1, 8));
    b[5] = -(t(1, 2) * (P{1} - t(1, 6) + t(1, 8)));
    b[6] = t(1, 1) * (P{1} + t(1, 2) - t(1, 6)) * (P{1} - t(1, 2) - t(1, 6));
    b[7] = -x;
    f.b = BivariatePolynomial(std::move(b));
    return f;
  }

  /// a q + b p
  [[nodiscard]] BivariatePolynomial combination() const { return a * q + b * p; }

  [[nodiscard]] bool bezout_identity_holds() const { return combination() == phi; }

  /// b(z,t) = -z^{m-2} a(z^{-1},t)
  [[nodiscard]] bool reflection_holds() const {
    if (a.z_degree() > m - 2) return false;
    return b == -a.reflect_z(m - 2);
  }
};

}  // namespace poincare
