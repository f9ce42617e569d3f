#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/ff/prime_field.hpp"
#include "poincare/int_polynomial.hpp"

namespace poincare {

enum class Parity {
  Odd,    // n odd
  Even2,  // n = 2 mod 4
  Even4,  // n = 0 mod 4
};

inline std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even2: return "even2";
    case Parity::Even4: return "even4";
  }
  return "?";
}

/// Integer invariants attached to binary forms of degree n.
struct Parameters {
  int n = 0;
  int s = 0;          // n = 2s-1 (odd) or n = 2s (even); t-degree of p_n, q_n
  int m = 0;          // z-degree of p_n, q_n
  int d = 0;          // degree of r_n
  int alpha_deg = 0;  // degree of alpha_0 = d - 2s
  int delta = 0;      // deg A_n = 2 * delta
  Parity parity = Parity::Odd;

  [[nodiscard]] bool odd() const noexcept { return parity == Parity::Odd; }

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

inline Parameters derive_parameters(int n) {
  if (n < 3) throw std::domain_error("degree n must be at least 3, got " + std::to_string(n));
  Parameters p;
  p.n = n;
  if (n % 2 == 1) {
    p.parity = Parity::Odd;
    p.s = (n + 1) / 2;
    p.m = p.s * p.s;
    p.d = 2 * p.s * (n - 2);
    p.delta = 2 * p.s * (p.s - 2);
  } else {
    p.s = n / 2;
    p.m = p.s * (p.s + 1);
    p.d = p.s * (n - 1);
    if (n % 4 == 2) {
      p.parity = Parity::Even2;
      p.delta = (p.s * (2 * p.s - 3) - 1) / 2;
    } else {
      p.parity = Parity::Even4;
      p.delta = p.s * (p.s - 2);
    }
  }
  p.alpha_deg = p.d - 2 * p.s;
  return p;
}

/// Minimal commutative-ring interface shared by PrimeField and IntegerRing.
template <class R>
concept Ring = requires(const R& r, typename R::value_type a, typename R::value_type b) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
};

/// Exact integers, for evaluating actors at integer points in fixture tests.
struct IntegerRing {
  using value_type = BigInt;
  [[nodiscard]] BigInt zero() const { return 0; }
  [[nodiscard]] BigInt one() const { return 1; }
  [[nodiscard]] BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
  [[nodiscard]] BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
  [[nodiscard]] BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
};

template <Ring R>
typename R::value_type ring_pow(const R& ring, typename R::value_type base, std::uint64_t e) {
  typename R::value_type acc = ring.one();
  while (e) {
    if (e & 1) acc = ring.mul(acc, base);
    base = ring.mul(base, base);
    e >>= 1;
  }
  return acc;
}

/// Point evaluation of p_n, q_n and phi_n from their product forms. Holds no
/// expansion; the z-powers are walked with a ladder (z, z^3, z^5, ... for odd
/// n; z^2, z^4, ... for even n), one extra multiplication per factor.
class ActorEvaluator {
public:
  explicit ActorEvaluator(Parameters params) : params_(params) {}

  [[nodiscard]] const Parameters& params() const noexcept { return params_; }

  /// p_n(z,t) = prod_{i=1}^s (1 - t z^{e_i})
  template <Ring R>
  typename R::value_type p(const R& ring, const typename R::value_type& z, const typename R::value_type& t) const {
    auto [power, step] = ladder(ring, z);
    auto acc = ring.one();
    for (int i = 0; i < params_.s; ++i) {
      acc = ring.mul(acc, ring.sub(ring.one(), ring.mul(t, power)));
      power = ring.mul(power, step);
    }
    return acc;
  }

  /// q_n(z,t) = prod_{i=1}^s (z^{e_i} - t)
  template <Ring R>
  typename R::value_type q(const R& ring, const typename R::value_type& z, const typename R::value_type& t) const {
    auto [power, step] = ladder(ring, z);
    auto acc = ring.one();
    for (int i = 0; i < params_.s; ++i) {
      acc = ring.mul(acc, ring.sub(power, t));
      power = ring.mul(power, step);
    }
    return acc;
  }

  /// phi_n(z,t) = z^{m-2} (z^2 - 1) r_n(t), with r_n(t) supplied as a value.
  template <Ring R>
  typename R::value_type phi(const R& ring, const typename R::value_type& z,
                             const typename R::value_type& r_at_t) const {
    const auto z2 = ring.mul(z, z);
    const auto zm2 = ring_pow(ring, z, static_cast<std::uint64_t>(params_.m - 2));
    return ring.mul(ring.mul(zm2, ring.sub(z2, ring.one())), r_at_t);
  }

private:
  template <Ring R>
  std::pair<typename R::value_type, typename R::value_type> ladder(const R& ring,
                                                                   const typename R::value_type& z) const {
    auto z2 = ring.mul(z, z);
    if (params_.odd()) return {z, z2};
    return {z2, z2};
  }

  Parameters params_;
};

/// r_n(t) = prod_{i=2}^{n-1} (1 - t^{2i})         for odd n,
///          (1 + t) prod_{i=2}^{n-1} (1 - t^i)     for even n.
inline IntPolynomial build_r(const Parameters& params) {
  IntPolynomial r{1};
  if (params.odd()) {
    for (int i = 2; i <= params.n - 1; ++i) r.multiply_binomial(-1, 2 * i);
  } else {
    r.multiply_binomial(+1, 1);
    for (int i = 2; i <= params.n - 1; ++i) r.multiply_binomial(-1, i);
  }
  return r;
}

// Free-function forms over a prime field.

inline ff::PrimeField::value_type eval_p(const Parameters& params, const ff::PrimeField& f,
                                         ff::PrimeField::value_type z, ff::PrimeField::value_type t) {
  return ActorEvaluator(params).p(f, z, t);
}

inline ff::PrimeField::value_type eval_q(const Parameters& params, const ff::PrimeField& f,
                                         ff::PrimeField::value_type z, ff::PrimeField::value_type t) {
  return ActorEvaluator(params).q(f, z, t);
}

/// `r_mod` is r_n reduced into f (see IntPolynomial::reduce_mod).
inline ff::PrimeField::value_type eval_phi(const Parameters& params, const ff::PrimeField& f,
                                           ff::PrimeField::value_type z, ff::PrimeField::value_type t,
                                           const std::vector<ff::PrimeField::value_type>& r_mod) {
  return ActorEvaluator(params).phi(f, z, f.evaluate(r_mod, t));
}

}  // namespace poincare
