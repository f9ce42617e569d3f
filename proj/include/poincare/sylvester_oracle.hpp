#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poincare/assembler.hpp"
#include "poincare/int_polynomial.hpp"

namespace poincare {

/// Coefficients of q^0 .. q^max_weight in the Gaussian binomial [a+b choose b]_q,
/// i.e. the number of partitions of w into at most b parts each at most a.
/// Built as prod_{i=1}^{min(a,b)} (1 - q^{max(a,b)+i}) / (1 - q^i), truncated
/// at max_weight; both steps are exact on truncated power series.
inline std::vector<BigInt> gaussian_binomial(int a, int b, long max_weight) {
  if (a < 0 || b < 0) throw std::domain_error("gaussian_binomial: negative argument");
  if (max_weight < 0) return {};
  const auto W = static_cast<std::size_t>(max_weight);
  std::vector<BigInt> f(W + 1);
  f[0] = 1;
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  for (int i = 1; i <= lo; ++i) {
    const long up = hi + i;
    for (long w = max_weight; w >= up; --w) f[static_cast<std::size_t>(w)] -= f[static_cast<std::size_t>(w - up)];
    const auto down = static_cast<std::size_t>(i);
    for (std::size_t w = down; w <= W; ++w) f[w] += f[w - down];
  }
  return f;
}

/// dim I_n^k = N(n,k,nk/2) - N(n,k,nk/2-1) (zero when nk is odd), with
/// N(n,k,w) the number of partitions of w into at most k parts of size at most n.
inline BigInt invariant_dim(int n, int k) {
  if (n < 1 || k < 0) throw std::domain_error("invariant_dim: need n >= 1, k >= 0");
  const long nk = static_cast<long>(n) * k;
  if (nk % 2 != 0) return 0;
  const long w = nk / 2;
  const auto counts = gaussian_binomial(n, k, w);
  const BigInt below = w >= 1 ? counts[static_cast<std::size_t>(w - 1)] : BigInt(0);
  return counts[static_cast<std::size_t>(w)] - below;
}

/// [dim I_n^0, ..., dim I_n^K].
inline std::vector<BigInt> dimension_table(int n, int K) {
  std::vector<BigInt> dims;
  dims.reserve(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) dims.push_back(invariant_dim(n, k));
  return dims;
}

/// First K+1 Taylor coefficients of a/b; b(0) must be +-1.
inline std::vector<BigInt> expand_series(const IntPolynomial& a, const IntPolynomial& b, int K) {
  const BigInt b0 = b.coefficient(0);
  if (b0 != 1 && b0 != -1) throw std::domain_error("expand_series: denominator must have constant term +-1");
  if (K < 0) return {};
  const auto len = static_cast<std::size_t>(K) + 1;
  std::vector<BigInt> out(len);
  const auto& bc = b.coefficients();
  for (std::size_t k = 0; k < len; ++k) {
    BigInt acc = a.coefficient(k);
    const std::size_t top = std::min(k, bc.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (bc[j] != 0) acc -= bc[j] * out[k - j];
    }
    out[k] = b0 == 1 ? acc : BigInt(-acc);
  }
  return out;
}

inline std::vector<BigInt> expand_series(const PoincareRational& series, int K) {
  return expand_series(series.numerator, series.denominator, K);
}

struct Certification {
  bool certified = false;
  int depth = 0;  // K = deg A + deg B
  std::optional<int> first_bad_k;
  BigInt expected;  // oracle value at first_bad_k
  BigInt actual;    // series value at first_bad_k
};

/// Compares the Taylor coefficients of A/B with the Cayley-Sylvester
/// dimensions for k = 0 .. deg A + deg B. Two rational functions with
/// numerator degree <= deg A and denominator degree <= deg B that agree
/// through that order are equal, so agreement proves P_n = A/B outright.
inline Certification certify(const PoincareRational& series) {
  Certification out;
  out.depth = static_cast<int>(std::max(0L, series.numerator.degree()) + std::max(0L, series.denominator.degree()));
  const auto taylor = expand_series(series, out.depth);
  for (int k = 0; k <= out.depth; ++k) {
    const BigInt dim = invariant_dim(series.params.n, k);
    if (dim != taylor[static_cast<std::size_t>(k)]) {
      out.first_bad_k = k;
      out.expected = dim;
      out.actual = taylor[static_cast<std::size_t>(k)];
      return out;
    }
  }
  out.certified = true;
  return out;
}

/// Coefficient of t^k in the numerator of P_n written over `denominator`,
/// i.e. in A * D / B. Throws InexactDivision when B does not divide A * D.
inline BigInt howe_coefficient(const PoincareRational& series, const std::vector<DenominatorFactor>& denominator,
                               int k) {
  const auto d = expand_factors(denominator);
  if (d.coefficient(0) != 1) throw std::domain_error("requested denominator must have constant term 1");
  const auto product = series.numerator * d;
  auto [q, r] = divide(product, series.denominator);
  if (!r.is_zero()) throw InexactDivision("A*D by B", r);
  return q.coefficient(static_cast<std::size_t>(k));
}

/// prod_{j=lo}^{hi} (1 - t^{step*j}) as a factor list.
inline std::vector<DenominatorFactor> product_denominator(int lo, int hi, int step = 1) {
  std::vector<DenominatorFactor> out;
  for (int j = lo; j <= hi; ++j) out.push_back({-1, step * j, 1});
  return out;
}

}  // namespace poincare
