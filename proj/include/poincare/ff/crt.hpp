#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "poincare/ff/prime_field.hpp"
#include "poincare/int_polynomial.hpp"

namespace poincare::ff {

/// Unique integer in (-M/2, M/2] congruent to residues[i] mod moduli[i],
/// M = prod moduli. Garner's mixed-radix reconstruction.
inline BigInt crt_symmetric(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw std::domain_error("crt: residue/modulus count mismatch");
  }
  BigInt x = residues[0] % moduli[0];
  BigInt M = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const PrimeField f(moduli[i]);
    const auto xm = f.from_big(x);
    const auto Mm = f.from_big(M);
    const auto r = residues[i] % moduli[i];
    const auto coef = f.mul(f.sub(r, xm), f.inv(Mm));
    x += M * coef;
    M *= moduli[i];
  }
  if (2 * x > M) x -= M;
  return x;
}

/// Coefficient-wise symmetric CRT lift of per-prime residue vectors.
inline IntPolynomial crt_lift(const std::vector<std::vector<std::uint64_t>>& residues,
                              const std::vector<std::uint64_t>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw std::domain_error("crt_lift: need one residue vector per modulus");
  }
  const std::size_t len = residues.front().size();
  for (const auto& r : residues) {
    if (r.size() != len) throw std::domain_error("crt_lift: inconsistent residue vector lengths");
  }
  std::vector<BigInt> out(len);
  std::vector<std::uint64_t> column(moduli.size());
  for (std::size_t c = 0; c < len; ++c) {
    for (std::size_t i = 0; i < moduli.size(); ++i) column[i] = residues[i][c];
    out[c] = crt_symmetric(column, moduli);
  }
  return IntPolynomial(std::move(out));
}

}  // namespace poincare::ff
