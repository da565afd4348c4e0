#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cnlie {

// Parities in the n-ary machinery are plain ints in {0,1}.

inline void validate_permutation(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v])
      throw std::invalid_argument("malformed permutation");
    seen[v] = 1;
  }
}

// |v|_k: parity of the sum of the first k degrees; k = 0 gives 0.
inline int prefix_degree(const std::vector<int>& degrees, std::size_t k) {
  if (k > degrees.size()) throw std::out_of_range("prefix length exceeds degree list");
  int s = 0;
  for (std::size_t i = 0; i < k; ++i) s ^= degrees[i] & 1;
  return s;
}

inline int permutation_parity(const std::vector<int>& perm) {
  validate_permutation(perm);
  int s = 0;
  for (std::size_t p = 0; p < perm.size(); ++p)
    for (std::size_t q = p + 1; q < perm.size(); ++q)
      if (perm[p] > perm[q]) s ^= 1;
  return s;
}

// Koszul sign |v_sigma|: one factor |v_a||v_b| for every inversion of sigma,
// i.e. for every pair moved past each other. degrees[i] is the parity of v_i
// in the original order; perm lists the reordered indices.
inline int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& perm) {
  if (degrees.size() != perm.size())
    throw std::invalid_argument("degree list and permutation differ in length");
  validate_permutation(perm);
  int s = 0;
  for (std::size_t p = 0; p < perm.size(); ++p)
    for (std::size_t q = p + 1; q < perm.size(); ++q)
      if (perm[p] > perm[q]) s ^= degrees[perm[p]] & degrees[perm[q]] & 1;
  return s;
}

}  // namespace cnlie
