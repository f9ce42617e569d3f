#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poincare/ff/prime_field.hpp"

namespace poincare::ff {

struct Node {
  PrimeField::value_type x;
  PrimeField::value_type y;
};

/// Coefficients (ascending powers) of the unique polynomial of degree at most
/// `degree` through the given nodes. Lagrange form, O(k^2):
/// M(t) = prod (t - x_i); each basis numerator is M(t)/(t - x_i) by synthetic
/// division, scaled by y_i / prod_{j != i} (x_i - x_j).
inline std::vector<PrimeField::value_type> interpolate(const PrimeField& f, const std::vector<Node>& nodes,
                                                       std::size_t degree) {
  using V = PrimeField::value_type;
  const std::size_t k = degree + 1;
  if (nodes.size() != k) {
    throw std::domain_error("interpolation needs exactly degree+1 nodes");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (nodes[i].x == nodes[j].x) throw std::domain_error("duplicate interpolation node");
    }
  }

  // master[i] = coefficient of t^i in prod (t - x_j); degree k.
  std::vector<V> master(k + 1, 0);
  master[0] = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const V negx = f.neg(nodes[j].x);
    for (std::size_t i = j + 1; i > 0; --i) master[i] = f.add(master[i - 1], f.mul(master[i], negx));
    master[0] = f.mul(master[0], negx);
  }

  std::vector<V> out(k, 0);
  std::vector<V> basis(k);
  for (std::size_t i = 0; i < k; ++i) {
    const V xi = nodes[i].x;
    // M(t) / (t - xi), highest coefficient first.
    V carry = master[k];
    for (std::size_t d = k; d-- > 0;) {
      basis[d] = carry;
      carry = f.add(master[d], f.mul(carry, xi));
    }
    V denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) denom = f.mul(denom, f.sub(xi, nodes[j].x));
    }
    const V scale = f.mul(nodes[i].y, f.inv(denom));
    if (scale == 0) continue;
    for (std::size_t d = 0; d < k; ++d) out[d] = f.add(out[d], f.mul(basis[d], scale));
  }
  return out;
}

}  // namespace poincare::ff
