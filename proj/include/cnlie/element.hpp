#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "cnlie/basis.hpp"
#include "cnlie/rational.hpp"

namespace cnlie {

enum class Degree { even, odd, mixed };

inline int parity_of(Degree d) { return d == Degree::odd ? 1 : 0; }

// Element of the superalgebra C_n: a sparse linear combination of basis
// monomials. Canonical form never stores a zero coefficient, so equality of
// elements is equality of the term maps.
class CliffordElement {
 public:
  using TermMap = std::map<std::uint32_t, GaussianRational>;

  explicit CliffordElement(int n) : n_(BasisIndex::empty(n).n) {}

  static CliffordElement zero(int n) { return CliffordElement(n); }
  static CliffordElement unit(int n) { return monomial(BasisIndex::empty(n)); }
  static CliffordElement monomial(const BasisIndex& I, GaussianRational c = GaussianRational(1)) {
    CliffordElement x(I.n);
    x.add_term(I.bits, c);
    return x;
  }

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  GaussianRational coefficient(std::uint32_t bits) const {
    auto it = terms_.find(bits);
    return it == terms_.end() ? GaussianRational() : it->second;
  }
  GaussianRational coefficient(const BasisIndex& I) const { return coefficient(I.bits); }

  // Accumulates c * gamma_bits, pruning the term if it cancels to zero.
  void add_term(std::uint32_t bits, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(bits, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  CliffordElement& operator+=(const CliffordElement& o) {
    require_same(o);
    for (const auto& [bits, c] : o.terms_) add_term(bits, c);
    return *this;
  }
  CliffordElement& operator-=(const CliffordElement& o) {
    require_same(o);
    for (const auto& [bits, c] : o.terms_) add_term(bits, -c);
    return *this;
  }
  CliffordElement& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [bits, c] : terms_) c *= s;
    return *this;
  }
  CliffordElement operator-() const {
    CliffordElement out(n_);
    for (const auto& [bits, c] : terms_) out.terms_.emplace(bits, -c);
    return out;
  }

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const GaussianRational& s, CliffordElement x) { return x *= s; }
  friend CliffordElement operator*(CliffordElement x, const GaussianRational& s) { return x *= s; }

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

  // even / odd when all terms share that parity; the zero element is even.
  Degree degree() const {
    if (terms_.empty()) return Degree::even;
    int p = std::popcount(terms_.begin()->first) & 1;
    for (const auto& [bits, c] : terms_)
      if ((std::popcount(bits) & 1) != p) return Degree::mixed;
    return p ? Degree::odd : Degree::even;
  }

  CliffordElement parity_part(int parity) const {
    CliffordElement out(n_);
    for (const auto& [bits, c] : terms_)
      if ((std::popcount(bits) & 1) == (parity & 1)) out.terms_.emplace(bits, c);
    return out;
  }

  void require_same(const CliffordElement& o) const {
    if (n_ != o.n_)
      throw AmbientMismatch("ambient mismatch: n=" + std::to_string(n_) + " vs n=" +
                            std::to_string(o.n_));
  }

 private:
  int n_;
  TermMap terms_;
};

// Bilinear extension of the basis product gamma_I gamma_J = sign gamma_{IxorJ}.
inline CliffordElement multiply(const CliffordElement& x, const CliffordElement& y) {
  x.require_same(y);
  const int n = x.ambient();
  CliffordElement out(n);
  for (const auto& [ib, ic] : x.terms()) {
    const BasisIndex I(ib, n);
    for (const auto& [jb, jc] : y.terms()) {
      auto [sign, K] = basis_product(I, BasisIndex(jb, n));
      GaussianRational c = ic * jc;
      if (sign < 0) c = -c;
      out.add_term(K.bits, c);
    }
  }
  return out;
}

// [x,y] = xy - (-1)^{|x||y|} yx on homogeneous parts, extended bilinearly
// over the even/odd decomposition of each argument.
inline CliffordElement graded_commutator(const CliffordElement& x, const CliffordElement& y) {
  x.require_same(y);
  CliffordElement out(x.ambient());
  for (int p = 0; p < 2; ++p) {
    CliffordElement xp = x.parity_part(p);
    if (xp.is_zero()) continue;
    for (int q = 0; q < 2; ++q) {
      CliffordElement yq = y.parity_part(q);
      if (yq.is_zero()) continue;
      CliffordElement fwd = multiply(xp, yq);
      CliffordElement bwd = multiply(yq, xp);
      out += (p & q) ? fwd + bwd : fwd - bwd;
    }
  }
  return out;
}

inline Degree degree(const CliffordElement& x) { return x.degree(); }

}  // namespace cnlie
