#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/int_polynomial.hpp"

namespace poincare::ff {

/// Trial division; moduli here never exceed 2^32, so at most 2^15 odd
/// candidates are tried.
constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Arithmetic in Z/lZ for an odd prime l < 2^32. Elements are canonical
/// residues in [0, l) held in 64-bit words so products never overflow.
class PrimeField {
public:
  using value_type = std::uint64_t;

  static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 32;

  explicit PrimeField(std::uint64_t modulus) : p_(modulus) {
    if (modulus >= max_modulus) {
      throw std::domain_error("modulus " + std::to_string(modulus) + " exceeds 32 bits");
    }
    if (modulus == 2 || !is_prime(modulus)) {
      throw std::domain_error(std::to_string(modulus) + " is not an odd prime");
    }
  }

  [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }

  [[nodiscard]] value_type zero() const noexcept { return 0; }
  [[nodiscard]] value_type one() const noexcept { return 1; }

  [[nodiscard]] value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] value_type mul(value_type a, value_type b) const noexcept { return a * b % p_; }

  [[nodiscard]] value_type pow(value_type base, std::uint64_t e) const noexcept {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// Inverse by extended Euclid. Throws on zero.
  [[nodiscard]] value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<value_type>(t);
  }

  [[nodiscard]] value_type from_int(long long v) const noexcept {
    const long long m = static_cast<long long>(p_);
    long long r = v % m;
    return static_cast<value_type>(r < 0 ? r + m : r);
  }

  [[nodiscard]] value_type from_big(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  /// Horner evaluation of a residue coefficient vector.
  [[nodiscard]] value_type evaluate(const std::vector<value_type>& coeffs, value_type x) const noexcept {
    value_type acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
    return acc;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint64_t p_;
};

enum class PrimePolicy { PaperFaithful, Auto };

inline std::string_view to_string(PrimePolicy p) {
  return p == PrimePolicy::PaperFaithful ? "paper" : "auto";
}

/// The seven largest primes below 2^16, in descending order.
inline constexpr std::uint64_t paper_primes[] = {65521, 65519, 65497, 65479, 65449, 65447, 65437};

/// Ordered list of distinct prime moduli plus the policy that produced it.
/// Under the Auto policy the list is a lazily extended descending sequence
/// of primes below 2^bits; callers pull as many as they need via at().
class PrimeSet {
public:
  static PrimeSet paper() {
    PrimeSet s(PrimePolicy::PaperFaithful, 16);
    for (auto p : paper_primes) s.moduli_.push_back(p);
    return s;
  }

  static PrimeSet automatic(unsigned bits = 31) {
    if (bits < 8 || bits > 32) throw std::domain_error("prime bits must lie in [8, 32]");
    return PrimeSet(PrimePolicy::Auto, bits);
  }

  /// Explicit list, used by tests and for reduced-prime experiments.
  static PrimeSet custom(std::vector<std::uint64_t> moduli) {
    PrimeSet s(PrimePolicy::PaperFaithful, 32);
    for (auto p : moduli) {
      PrimeField{p};
      for (auto q : s.moduli_) {
        if (q == p) throw std::domain_error("duplicate modulus " + std::to_string(p));
      }
      s.moduli_.push_back(p);
    }
    return s;
  }

  [[nodiscard]] PrimePolicy policy() const noexcept { return policy_; }
  [[nodiscard]] unsigned bits() const noexcept { return bits_; }
  [[nodiscard]] bool is_fixed() const noexcept { return policy_ == PrimePolicy::PaperFaithful; }

  /// Number of fixed moduli (Auto sets report what has been generated so far).
  [[nodiscard]] std::size_t size() const noexcept { return moduli_.size(); }

  [[nodiscard]] const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }

  /// i-th modulus; Auto sets extend on demand.
  std::uint64_t at(std::size_t i) {
    if (policy_ == PrimePolicy::Auto) {
      while (moduli_.size() <= i) extend();
    }
    if (i >= moduli_.size()) throw std::out_of_range("prime index out of range");
    return moduli_[i];
  }

private:
  PrimeSet(PrimePolicy policy, unsigned bits) : policy_(policy), bits_(bits) {}

  void extend() {
    std::uint64_t c = moduli_.empty() ? (std::uint64_t{1} << bits_) - 1 : moduli_.back() - 2;
    if (c % 2 == 0) --c;
    while (c > 2 && !is_prime(c)) c -= 2;
    if (c <= 2) throw std::domain_error("ran out of primes");
    moduli_.push_back(c);
  }

  PrimePolicy policy_;
  unsigned bits_;
  std::vector<std::uint64_t> moduli_;
};

}  // namespace poincare::ff
