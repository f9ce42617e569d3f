#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poincare/ff/prime_field.hpp"

namespace poincare::ff {

/// Square system A x = b over a prime field, stored row-major.
class ModMatrix {
public:
  using value_type = PrimeField::value_type;

  explicit ModMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0), b_(dim, 0) {}

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  value_type& operator()(std::size_t row, std::size_t col) { return a_[row * dim_ + col]; }
  value_type operator()(std::size_t row, std::size_t col) const { return a_[row * dim_ + col]; }

  value_type& rhs(std::size_t row) { return b_[row]; }
  [[nodiscard]] value_type rhs(std::size_t row) const { return b_[row]; }

  /// A * x
  [[nodiscard]] std::vector<value_type> apply(const PrimeField& f, const std::vector<value_type>& x) const {
    if (x.size() != dim_) throw std::domain_error("vector length does not match matrix");
    std::vector<value_type> out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      value_type acc = 0;
      for (std::size_t j = 0; j < dim_; ++j) acc = f.add(acc, f.mul(a_[i * dim_ + j], x[j]));
      out[i] = acc;
    }
    return out;
  }

  [[nodiscard]] const std::vector<value_type>& rhs_vector() const noexcept { return b_; }

private:
  std::size_t dim_;
  std::vector<value_type> a_;
  std::vector<value_type> b_;
};

/// Gaussian elimination with first-nonzero pivoting and back substitution. Returns nullopt when the
/// matrix is singular mod l. A successful solution is re-multiplied against
/// the original system before it is returned.
inline std::optional<std::vector<PrimeField::value_type>> solve_linear(const PrimeField& f,
                                                                       const ModMatrix& system) {
  using V = PrimeField::value_type;
  const std::size_t n = system.dim();
  const std::uint64_t p = f.modulus();
  // Augmented working copy, row-major, n x (n+1).
  const std::size_t w = n + 1;
  std::vector<V> m(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * w + j] = system(i, j);
    m[i * w + n] = system.rhs(i);
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * w + col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = col; j < w; ++j) std::swap(m[piv * w + j], m[col * w + j]);
    }
    V* prow = &m[col * w];
    const V inv = f.inv(prow[col]);
    for (std::size_t j = col; j < w; ++j) prow[j] = prow[j] * inv % p;
    for (std::size_t i = col + 1; i < n; ++i) {
      V* row = &m[i * w];
      const V factor = row[col];
      if (factor == 0) continue;
      const V negf = p - factor;
      for (std::size_t j = col; j < w; ++j) row[j] = (row[j] + negf * prow[j]) % p;
    }
  }

  // Unit upper-triangular back substitution.
  std::vector<V> x(n);
  for (std::size_t i = n; i-- > 0;) {
    V acc = m[i * w + n];
    for (std::size_t j = i + 1; j < n; ++j) acc = f.sub(acc, f.mul(m[i * w + j], x[j]));
    x[i] = acc;
  }
  if (system.apply(f, x) != system.rhs_vector()) {
    throw std::logic_error("linear solve residual check failed");
  }
  return x;
}

}  // namespace poincare::ff
