#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cnlie/brackets.hpp"
#include "cnlie/element.hpp"
#include "cnlie/spinor.hpp"

namespace cnlie {

namespace detail {

inline void require_even_ambient(int n, int cap = 12) {
  if (n % 2 != 0) throw std::invalid_argument("ternary bracket needs even n (n = 2m)");
  if (n > cap) throw std::invalid_argument("ternary bracket capped at n <= " + std::to_string(cap));
}

// [gamma_I, gamma_J, gamma_K] on basis monomials:
//   Str(gamma_I) [gamma_J,gamma_K] - (-1)^{|I||J|} Str(gamma_J) [gamma_I,gamma_K]
//   + (-1)^{|K|(|I|+|J|)} Str(gamma_K) [gamma_I,gamma_J],
// with Str in closed form, so only triples containing {1..n} contribute.
inline CliffordElement ternary_basis_bracket(const BasisIndex& I, const BasisIndex& J,
                                             const BasisIndex& K) {
  const int n = I.n;
  CliffordElement out(n);
  const GaussianRational str_full = GaussianRational::two_i_pow(static_cast<unsigned>(n / 2));
  auto add = [&](const BasisIndex& traced, const BasisIndex& A, const BasisIndex& B, int sign) {
    if (!traced.is_full()) return;
    int f = f_structure(A, B);
    if (f == 0) return;
    GaussianRational c = str_full * GaussianRational(sign * f);
    out.add_term(A.bits ^ B.bits, c);
  };
  add(I, J, K, 1);
  add(J, I, K, (I.parity() & J.parity()) ? 1 : -1);
  add(K, I, J, (K.parity() & (I.parity() ^ J.parity())) ? -1 : 1);
  return out;
}

}  // namespace detail

// Graded ternary commutator of C_n, extended multilinearly over terms (every
// basis monomial is homogeneous, so the extension is the unique one).
inline CliffordElement ternary_bracket(const CliffordElement& x, const CliffordElement& y,
                                       const CliffordElement& z) {
  x.require_same(y);
  x.require_same(z);
  const int n = x.ambient();
  detail::require_even_ambient(n);
  CliffordElement out(n);
  for (const auto& [ib, ic] : x.terms())
    for (const auto& [jb, jc] : y.terms())
      for (const auto& [kb, kc] : z.terms()) {
        CliffordElement part = detail::ternary_basis_bracket(BasisIndex(ib, n), BasisIndex(jb, n),
                                                             BasisIndex(kb, n));
        part *= ic * jc * kc;
        out += part;
      }
  return out;
}

// Closed form of the ternary structure constants. The nonzero case is
// (2i)^m f(I,J) gamma_{I xor J} with {1..n} in the last slot; a single
// {1..n} in slot one or two is first moved there by signed graded
// transpositions (|gamma_N| is even, so each adjacent move contributes -1).
inline CliffordElement ternary_closed_form(const BasisIndex& I, const BasisIndex& J,
                                           const BasisIndex& K) {
  require_same_ambient(I, J);
  require_same_ambient(I, K);
  const int n = I.n;
  if (n % 2 != 0) throw std::invalid_argument("ternary closed form needs even n");
  const int full_count = int(I.is_full()) + int(J.is_full()) + int(K.is_full());
  if (full_count != 1) return CliffordElement::zero(n);
  int sign = 1;
  BasisIndex A = I, B = J;
  if (J.is_full()) {
    A = I;
    B = K;
    sign = -1;  // one swap of the last two slots
  } else if (I.is_full()) {
    A = J;
    B = K;  // two swaps, signs cancel
  }
  const int f = f_structure(A, B);
  if (f == 0) return CliffordElement::zero(n);
  GaussianRational c = GaussianRational::two_i_pow(static_cast<unsigned>(n / 2));
  c *= GaussianRational(sign * f);
  return CliffordElement::monomial(BasisIndex(A.bits ^ B.bits, n), c);
}

// Literal reading of the closed form: zero unless {1..n} sits exactly in the
// last slot. Kept for quantifying how it differs from the bracket itself.
inline CliffordElement ternary_literal_form(const BasisIndex& I, const BasisIndex& J,
                                            const BasisIndex& K) {
  require_same_ambient(I, J);
  require_same_ambient(I, K);
  const int n = I.n;
  if (n % 2 != 0) throw std::invalid_argument("ternary closed form needs even n");
  if (!K.is_full() || I.is_full() || J.is_full()) return CliffordElement::zero(n);
  const int f = f_structure(I, J);
  if (f == 0) return CliffordElement::zero(n);
  GaussianRational c = GaussianRational::two_i_pow(static_cast<unsigned>(n / 2));
  c *= GaussianRational(f);
  return CliffordElement::monomial(BasisIndex(I.bits ^ J.bits, n), c);
}

// Ternary structure constants, stored on sorted (canonical) index triples
// only; other orderings are reconstructed through graded-skew signs.
struct TernaryStructureTable {
  int n = 2;
  std::map<std::array<std::uint32_t, 3>, CliffordElement> canonical;  // nonzero entries

  CliffordElement lookup(const BasisIndex& I, const BasisIndex& J, const BasisIndex& K) const {
    std::array<std::uint32_t, 3> t{I.bits, J.bits, K.bits};
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k + 1 < 3 - pass; ++k)
        if (t[k] > t[k + 1]) {
          int pa = std::popcount(t[k]) & 1, pb = std::popcount(t[k + 1]) & 1;
          sign *= (pa & pb) ? 1 : -1;
          std::swap(t[k], t[k + 1]);
        }
    auto it = canonical.find(t);
    if (it == canonical.end()) return CliffordElement::zero(n);
    return sign == 1 ? it->second : -it->second;
  }
};

// Materializes the structure constants of the induced ternary algebra for
// n in {2,4,6,8}; every canonical triple is evaluated by ternary_bracket.
inline TernaryStructureTable build_structure_table(int n) {
  if (n != 2 && n != 4 && n != 6 && n != 8)
    throw std::invalid_argument("structure table supports n in {2,4,6,8}");
  TernaryStructureTable tbl;
  tbl.n = n;
  const std::uint32_t d = 1u << n;
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t b = a; b < d; ++b)
      for (std::uint32_t c = b; c < d; ++c) {
        CliffordElement v = ternary_bracket(CliffordElement::monomial(BasisIndex(a, n)),
                                            CliffordElement::monomial(BasisIndex(b, n)),
                                            CliffordElement::monomial(BasisIndex(c, n)));
        if (!v.is_zero()) tbl.canonical.emplace(std::array<std::uint32_t, 3>{a, b, c}, std::move(v));
      }
  return tbl;
}

struct Theorem14Mismatch {
  std::array<std::uint32_t, 3> triple;
  CliffordElement bracket;  // direct ternary commutator
  CliffordElement other;    // closed form (or literal reading)
};

// Comparison of the direct ternary commutator against the closed form on all
// ordered triples, plus the triples where the literal "zero in all other
// cases" reading would disagree (the full set in slot one or two).
struct Theorem14Report {
  int n = 2;
  std::uint64_t checked = 0;
  std::vector<Theorem14Mismatch> mismatches;             // canonical-K convention
  std::vector<Theorem14Mismatch> literal_disagreements;  // literal reading

  bool passed() const { return mismatches.empty(); }
};

inline Theorem14Report verify_theorem14(int n) {
  if (n != 2 && n != 4) throw std::invalid_argument("theorem verification supports n in {2,4}");
  Theorem14Report report;
  report.n = n;
  const std::uint32_t d = 1u << n;
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t b = 0; b < d; ++b)
      for (std::uint32_t c = 0; c < d; ++c) {
        const BasisIndex I(a, n), J(b, n), K(c, n);
        CliffordElement direct = ternary_bracket(CliffordElement::monomial(I),
                                                 CliffordElement::monomial(J),
                                                 CliffordElement::monomial(K));
        CliffordElement closed = ternary_closed_form(I, J, K);
        CliffordElement literal = ternary_literal_form(I, J, K);
        ++report.checked;
        if (direct != closed) report.mismatches.push_back({{a, b, c}, direct, closed});
        if (direct != literal) report.literal_disagreements.push_back({{a, b, c}, direct, literal});
      }
  return report;
}

}  // namespace cnlie
