#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cnlie/errors.hpp"

namespace cnlie {

inline constexpr int kMaxGenerators = 16;

inline std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

// Subset I of {1..n} as a bitmask (bit i-1 set <=> generator i in I).
// Indexes the basis monomial gamma_I; the empty set indexes the unit e.
struct BasisIndex {
  std::uint32_t bits = 0;
  int n = 1;

  BasisIndex() = default;
  BasisIndex(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {
    if (n < 1 || n > kMaxGenerators)
      throw std::invalid_argument("ambient generator count must be in 1.." +
                                  std::to_string(kMaxGenerators));
    if (bits > full_mask(n)) throw std::invalid_argument("basis mask not contained in {1..n}");
  }

  static BasisIndex empty(int n) { return {0u, n}; }
  static BasisIndex full(int n) { return {full_mask(n), n}; }
  static BasisIndex from_generators(const std::vector<int>& gens, int n) {
    std::uint32_t bits = 0;
    for (int g : gens) {
      if (g < 1 || g > n) throw std::invalid_argument("generator index out of range 1..n");
      bits |= 1u << (g - 1);
    }
    return {bits, n};
  }

  int cardinality() const { return std::popcount(bits); }
  int parity() const { return cardinality() & 1; }  // |gamma_I| = |I| mod 2
  bool is_full() const { return bits == full_mask(n); }

  std::vector<int> generators() const {  // ascending, 1-based
    std::vector<int> out;
    for (std::uint32_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.bits == b.bits && a.n == b.n;
  }
};

inline void require_same_ambient(const BasisIndex& a, const BasisIndex& b) {
  if (a.n != b.n)
    throw AmbientMismatch("ambient mismatch: n=" + std::to_string(a.n) + " vs n=" +
                          std::to_string(b.n));
}

// sigma(I,J) = sum over j in J of #{i in I : i > j}.
inline unsigned sigma_count(const BasisIndex& I, const BasisIndex& J) {
  require_same_ambient(I, J);
  unsigned total = 0;
  for (std::uint32_t jm = J.bits; jm; jm &= jm - 1) {
    int j = std::countr_zero(jm) + 1;
    // bits at positions >= j are exactly the generators of I greater than j
    total += static_cast<unsigned>(std::popcount(I.bits >> j));
  }
  return total;
}

struct SignedBasis {
  int sign;  // +1 or -1
  BasisIndex index;
};

// gamma_I gamma_J = (-1)^{sigma(I,J)} gamma_{I xor J}.
inline SignedBasis basis_product(const BasisIndex& I, const BasisIndex& J) {
  require_same_ambient(I, J);
  int sign = (sigma_count(I, J) & 1u) ? -1 : 1;
  return {sign, BasisIndex(I.bits ^ J.bits, I.n)};
}

// f(I,J) = (-1)^{sigma(I,J)} (1 - (-1)^{|I inter J|}), always in {-2, 0, 2};
// the binary bracket is [gamma_I, gamma_J] = f(I,J) gamma_{I xor J}.
inline int f_structure(const BasisIndex& I, const BasisIndex& J) {
  require_same_ambient(I, J);
  if ((std::popcount(I.bits & J.bits) & 1) == 0) return 0;
  return (sigma_count(I, J) & 1u) ? -2 : 2;
}

}  // namespace cnlie
