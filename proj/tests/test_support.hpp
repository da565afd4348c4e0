#pragma once

// Shared helpers for the test suites: deterministic random draws (stable
// across platforms for a fixed seed) and random element generators.

#include <cstdint>
#include <random>
#include <vector>

#include "cnlie/element.hpp"
#include "cnlie/rational.hpp"

namespace testsupport {

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t d) {
  const std::uint64_t bound = (~std::uint64_t{0} / d) * d;
  std::uint64_t v = rng();
  while (v >= bound) v = rng();
  return v % d;
}

inline cnlie::GaussianRational random_gaussian(std::mt19937_64& rng) {
  auto part = [&]() {
    long num = static_cast<long>(draw_below(rng, 7)) - 3;  // -3..3
    long den = static_cast<long>(draw_below(rng, 3)) + 1;  // 1..3
    return cnlie::make_rational(num, den);
  };
  return {part(), part()};
}

// Nonzero homogeneous element of the requested parity with small random
// coefficients; deterministic for a fixed rng state.
inline cnlie::CliffordElement random_homogeneous(std::mt19937_64& rng, int n, int parity) {
  cnlie::CliffordElement x(n);
  while (x.is_zero()) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      if ((std::popcount(bits) & 1) != parity) continue;
      if (draw_below(rng, 2) == 0) continue;
      x.add_term(bits, random_gaussian(rng));
    }
  }
  return x;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, std::size_t len) {
  std::vector<int> perm(len);
  for (std::size_t i = 0; i < len; ++i) perm[i] = static_cast<int>(i);
  for (std::size_t i = len; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(draw_below(rng, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace testsupport
