#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "cnlie/element.hpp"
#include "cnlie/koszul.hpp"
#include "cnlie/spinor.hpp"

namespace cnlie {

// Linear trace-like form phi with phi([x,y]) = 0, stored on the basis only
// and extended linearly over elements.
struct TraceForm {
  int n = 1;
  std::map<std::uint32_t, GaussianRational> values;  // absent entries are zero

  GaussianRational operator()(const CliffordElement& x) const {
    if (x.ambient() != n)
      throw AmbientMismatch("trace form ambient mismatch: n=" + std::to_string(n) + " vs n=" +
                            std::to_string(x.ambient()));
    GaussianRational out;
    for (const auto& [bits, c] : x.terms()) {
      auto it = values.find(bits);
      if (it != values.end()) out += c * it->second;
    }
    return out;
  }

  // Str restricted to the monomial basis: only gamma_{1..n} survives, with
  // value (2i)^m.
  static TraceForm clifford_supertrace(int n) {
    if (n % 2 != 0) throw std::invalid_argument("supertrace form needs even n");
    TraceForm f;
    f.n = n;
    f.values[full_mask(n)] = GaussianRational::two_i_pow(static_cast<unsigned>(n / 2));
    return f;
  }
};

// [a_1,...,a_r] = sum over permutations of (-1)^{|sigma|+|a_sigma|}
// a_{i_1} o ... o a_{i_r}. Arguments must be homogeneous and share
// dimension and grading.
inline GradedMatrix endo_n_bracket(const std::vector<GradedMatrix>& as) {
  if (as.empty()) throw std::invalid_argument("endomorphism bracket needs at least one argument");
  std::vector<int> degrees;
  degrees.reserve(as.size());
  for (const auto& a : as) {
    as.front().require_compatible(a);
    Degree d = a.homogeneity();
    if (d == Degree::mixed)
      throw HomogeneityError("endomorphism bracket requires homogeneous matrices");
    degrees.push_back(parity_of(d));
  }
  const int r = static_cast<int>(as.size());
  GradedMatrix out(as.front().dim(), as.front().grading());
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = permutation_parity(perm) ^ koszul_sign(degrees, perm);
    GradedMatrix prod = as[perm.front()];
    for (int k = 1; k < r; ++k) prod = prod * as[perm[k]];
    out += sign ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// (r+1)-ary bracket induced from an r-ary one by a trace form:
// sum_k (-1)^{k-1} (-1)^{|x_k| |x|_{k-1}} tr(x_k) [x_1,...,^x_k,...,x_{r+1}].
// Inputs must be homogeneous; callers decompose mixed elements first.
template <class BaseBracket>
CliffordElement induced_bracket_supertrace(BaseBracket&& base_bracket, const TraceForm& trace,
                                           const std::vector<CliffordElement>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("induced bracket needs at least two arguments");
  std::vector<int> parities;
  parities.reserve(xs.size());
  for (const auto& x : xs) {
    Degree d = x.degree();
    if (d == Degree::mixed)
      throw HomogeneityError("induced bracket requires homogeneous elements");
    parities.push_back(parity_of(d));
  }
  CliffordElement out(xs.front().ambient());
  int prefix = 0;  // |x|_{k-1}
  for (std::size_t k = 0; k < xs.size(); ++k) {
    GaussianRational w = trace(xs[k]);
    if (!w.is_zero()) {
      std::vector<CliffordElement> rest;
      rest.reserve(xs.size() - 1);
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (j != k) rest.push_back(xs[j]);
      CliffordElement term = base_bracket(rest);
      term *= w;
      int sign = (static_cast<int>(k) & 1) ^ (parities[k] & prefix);
      out += sign ? -term : term;
    }
    prefix ^= parities[k];
  }
  return out;
}

// Classical (ungraded) induced bracket: for k+2 arguments,
// sum over the shuffles sigma = (i_1<...<i_k | i_{k+1}<i_{k+2}) of
// (-1)^{|sigma|} phi(x_{i_1},...,x_{i_k}) [x_{i_{k+1}}, x_{i_{k+2}}].
// Element type E needs +=, and multiplication by GaussianRational.
template <class E, class Bracket, class Phi>
E classical_induced_bracket(Bracket&& lie_bracket, Phi&& phi, const std::vector<E>& xs,
                            const E& zero_element) {
  const int total = static_cast<int>(xs.size());
  if (total < 3) throw std::invalid_argument("induced bracket needs k+2 >= 3 arguments");
  E acc = zero_element;
  for (int p = 0; p < total; ++p)
    for (int q = p + 1; q < total; ++q) {
      std::vector<int> perm;
      std::vector<E> chosen;
      perm.reserve(total);
      chosen.reserve(total - 2);
      for (int j = 0; j < total; ++j)
        if (j != p && j != q) {
          perm.push_back(j);
          chosen.push_back(xs[j]);
        }
      perm.push_back(p);
      perm.push_back(q);
      GaussianRational w = phi(chosen);
      if (w.is_zero()) continue;
      E br = lie_bracket(xs[p], xs[q]);
      br *= w;
      acc += permutation_parity(perm) ? -br : br;
    }
  return acc;
}

}  // namespace cnlie
