#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "poincare/ff/prime_field.hpp"
#include "poincare/int_polynomial.hpp"

namespace poincare {

/// gcd of the coefficients, nonnegative.
inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g < 0 ? BigInt(-g) : g;
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coefficients();
  for (auto& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

/// lc(b)^{deg a - deg b + 1} a mod b.
inline IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const BigInt& lb = b.leading();
  const long db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const auto shift = static_cast<std::size_t>(a.degree() - db);
    IntPolynomial sub = b;
    sub *= a.leading();
    a *= lb;
    a -= IntPolynomial::monomial(1, shift) * sub;
  }
  return a;
}

namespace detail {

using Residues = std::vector<std::uint64_t>;

inline void trim(Residues& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Degree of gcd(a, b) over F_p (Euclid), -1 if both are zero.
inline long modular_gcd_degree(Residues a, Residues b, const ff::PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const auto inv = f.inv(b.back());
    while (a.size() >= b.size()) {
      const auto q = f.mul(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(q, b[j]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

}  // namespace detail

/// gcd over Q, returned as a primitive integer polynomial with positive
/// leading coefficient (primitive remainder sequence).
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

/// True iff gcd(a, b) is constant over Q. A prime not dividing both leading
/// coefficients bounds deg gcd over Q by deg gcd over F_p, so one modular
/// gcd of degree 0 is a proof. Falls back to the exact gcd otherwise.
inline bool coprime_over_q(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.degree() == 0 || b.degree() == 0;
  std::uint64_t p = (std::uint64_t{1} << 31) - 1;
  for (int tries = 0; tries < 4; ++tries) {
    const ff::PrimeField f(p);
    if (f.from_big(a.leading()) != 0 || f.from_big(b.leading()) != 0) {
      if (detail::modular_gcd_degree(a.reduce_mod(p), b.reduce_mod(p), f) == 0) return true;
    }
    do {
      p -= 2;
    } while (!ff::is_prime(p));
  }
  return gcd(a, b).degree() == 0;
}

}  // namespace poincare
