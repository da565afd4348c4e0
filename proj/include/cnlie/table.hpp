#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnlie/element.hpp"
#include "cnlie/spinor.hpp"

namespace cnlie {

// Parities of the basis vectors of the underlying super vector space.
struct GradedBasisSpec {
  std::vector<int> degrees;  // each 0 or 1

  int dim() const { return static_cast<int>(degrees.size()); }

  void validate() const {
    if (degrees.empty()) throw std::invalid_argument("graded basis must be nonempty");
    for (int d : degrees)
      if (d != 0 && d != 1) throw std::invalid_argument("basis degrees must be 0 or 1");
  }

  static GradedBasisSpec clifford(int n) {
    GradedBasisSpec b;
    b.degrees.resize(std::size_t{1} << n);
    for (std::uint32_t i = 0; i < b.degrees.size(); ++i)
      b.degrees[i] = std::popcount(i) & 1;
    return b;
  }
};

// Sparse coefficient vector over an abstract basis; zero coefficients are
// never stored.
using SparseVec = std::map<int, GaussianRational>;

inline void sv_accumulate(SparseVec& dst, const SparseVec& src, const GaussianRational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [b, c] : src) {
    GaussianRational v = c * scale;
    auto [it, inserted] = dst.try_emplace(b, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

inline SparseVec sv_scale(SparseVec v, const GaussianRational& s) {
  if (s.is_zero()) return {};
  for (auto& [b, c] : v) c *= s;
  return v;
}

inline SparseVec to_sparse(const CliffordElement& x) {
  SparseVec out;
  for (const auto& [bits, c] : x.terms()) out.emplace(static_cast<int>(bits), c);
  return out;
}

inline CliffordElement from_sparse(const SparseVec& v, int n) {
  CliffordElement out(n);
  for (const auto& [b, c] : v) out.add_term(static_cast<std::uint32_t>(b), c);
  return out;
}

inline SparseVec matrix_to_sparse(const GradedMatrix& m) {
  SparseVec out;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (!m.at(r, c).is_zero()) out.emplace(r * m.dim() + c, m.at(r, c));
  return out;
}

// Arity-r structure-constant table over a graded basis; entries are stored
// for every ordered basis tuple, so verifier failures replay directly from
// the table. clifford_n > 0 marks tables whose basis index is the monomial
// bitmask of the ambient Clifford algebra.
struct BracketTable {
  int arity = 2;
  GradedBasisSpec basis;
  int clifford_n = 0;
  std::map<std::vector<int>, SparseVec> entries;

  const SparseVec& entry(const std::vector<int>& tuple) const {
    static const SparseVec kZero;
    auto it = entries.find(tuple);
    return it == entries.end() ? kZero : it->second;
  }

  int tuple_parity(const std::vector<int>& tuple) const {
    int p = 0;
    for (int b : tuple) p ^= basis.degrees[b];
    return p;
  }
};

// Fills a table by evaluating the bracket on every ordered tuple of basis
// indices. Fn: (const std::vector<int>&) -> SparseVec.
template <class Fn>
BracketTable materialize_table(int arity, GradedBasisSpec basis, int clifford_n, Fn&& bracket) {
  if (arity < 2) throw std::invalid_argument("bracket arity must be at least 2");
  basis.validate();
  BracketTable tbl;
  tbl.arity = arity;
  tbl.basis = std::move(basis);
  tbl.clifford_n = clifford_n;
  const int d = tbl.basis.dim();
  std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
  while (true) {
    tbl.entries.emplace(tuple, bracket(tuple));
    int slot = arity - 1;
    while (slot >= 0 && ++tuple[slot] == d) tuple[slot--] = 0;
    if (slot < 0) break;
  }
  return tbl;
}

// Multilinear evaluation of a table bracket on argument elements.
inline SparseVec eval_table(const BracketTable& tbl, const std::vector<SparseVec>& args) {
  if (static_cast<int>(args.size()) != tbl.arity)
    throw std::invalid_argument("argument count does not match table arity");
  SparseVec out;
  std::vector<int> tuple(args.size());
  auto expand = [&](auto&& self, std::size_t slot, const GaussianRational& coeff) -> void {
    if (slot == args.size()) {
      sv_accumulate(out, tbl.entry(tuple), coeff);
      return;
    }
    for (const auto& [b, c] : args[slot]) {
      tuple[slot] = b;
      self(self, slot + 1, coeff * c);
    }
  };
  expand(expand, 0, GaussianRational(1));
  return out;
}

}  // namespace cnlie
