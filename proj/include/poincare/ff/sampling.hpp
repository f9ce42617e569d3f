#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "poincare/ff/prime_field.hpp"

namespace poincare::ff {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent generator for the task identified by `path` under `seed`.
inline Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(seed);
  for (auto p : path) h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
  return Rng(h);
}

/// Uniform residue in [0, bound) by rejection, identical on every platform
/// (std::uniform_int_distribution is implementation-defined).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

/// `count` pairwise distinct field elements, none of them in `forbidden`.
inline std::vector<PrimeField::value_type> sample_distinct(Rng& rng, std::size_t count, const PrimeField& field,
                                                           const std::unordered_set<std::uint64_t>& forbidden = {}) {
  std::size_t blocked = 0;
  for (auto v : forbidden) {
    if (v < field.modulus()) ++blocked;
  }
  if (count + blocked > field.modulus()) {
    throw std::domain_error("field too small for the requested number of distinct samples");
  }
  std::vector<PrimeField::value_type> out;
  out.reserve(count);
  std::unordered_set<std::uint64_t> seen;
  while (out.size() < count) {
    const auto v = uniform_below(rng, field.modulus());
    if (forbidden.contains(v) || !seen.insert(v).second) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace poincare::ff
