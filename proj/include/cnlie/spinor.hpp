#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cnlie/element.hpp"
#include "cnlie/errors.hpp"
#include "cnlie/rational.hpp"

namespace cnlie {

class GradedMatrix;
GradedMatrix kron(const GradedMatrix& a, const GradedMatrix& b);

// Dense exact matrix carrying a diagonal Z2 grading operator Gamma (the
// chirality), stored as its +-1 diagonal. A matrix is even iff it commutes
// with Gamma and odd iff it anticommutes; both are decidable exactly from
// the support of the entries.
class GradedMatrix {
 public:
  GradedMatrix(int dim, std::vector<int> grading)
      : dim_(dim), grading_(std::move(grading)), a_(static_cast<std::size_t>(dim) * dim) {
    if (dim_ < 1) throw std::invalid_argument("matrix dimension must be positive");
    if (static_cast<int>(grading_.size()) != dim_)
      throw std::invalid_argument("grading diagonal length must equal dim");
    for (int g : grading_)
      if (g != 1 && g != -1) throw std::invalid_argument("grading entries must be +-1");
  }

  static GradedMatrix zero(int dim, std::vector<int> grading) {
    return GradedMatrix(dim, std::move(grading));
  }
  static GradedMatrix identity(int dim, std::vector<int> grading) {
    GradedMatrix m(dim, std::move(grading));
    for (int r = 0; r < dim; ++r) m.at(r, r) = GaussianRational(1);
    return m;
  }

  int dim() const { return dim_; }
  const std::vector<int>& grading() const { return grading_; }

  GaussianRational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const GaussianRational& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }

  void require_compatible(const GradedMatrix& o) const {
    if (dim_ != o.dim_ || grading_ != o.grading_)
      throw std::invalid_argument("matrix dimension/grading mismatch");
  }

  GradedMatrix& operator+=(const GradedMatrix& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  GradedMatrix& operator-=(const GradedMatrix& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  GradedMatrix& operator*=(const GaussianRational& s) {
    for (auto& v : a_) v *= s;
    return *this;
  }
  GradedMatrix operator-() const {
    GradedMatrix out(dim_, grading_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
  }

  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
  friend GradedMatrix operator*(const GaussianRational& s, GradedMatrix m) { return m *= s; }
  friend GradedMatrix operator*(GradedMatrix m, const GaussianRational& s) { return m *= s; }

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    a.require_compatible(b);
    GradedMatrix out(a.dim_, a.grading_);
    for (int r = 0; r < a.dim_; ++r)
      for (int k = 0; k < a.dim_; ++k) {
        const GaussianRational& ark = a.at(r, k);
        if (ark.is_zero()) continue;
        for (int c = 0; c < a.dim_; ++c) {
          const GaussianRational& bkc = b.at(k, c);
          if (bkc.is_zero()) continue;
          out.at(r, c) += ark * bkc;
        }
      }
    return out;
  }

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.dim_ == b.dim_ && a.grading_ == b.grading_ && a.a_ == b.a_;
  }
  friend bool operator!=(const GradedMatrix& a, const GradedMatrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  GaussianRational trace() const {
    GaussianRational t;
    for (int r = 0; r < dim_; ++r) t += at(r, r);
    return t;
  }

  // Parity with respect to Gamma; the zero matrix reports even.
  Degree homogeneity() const {
    bool has_even = false, has_odd = false;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        if (at(r, c).is_zero()) continue;
        (grading_[r] == grading_[c] ? has_even : has_odd) = true;
      }
    if (has_even && has_odd) return Degree::mixed;
    return has_odd ? Degree::odd : Degree::even;
  }

  GradedMatrix parity_part(int parity) const {
    GradedMatrix out(dim_, grading_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        int p = grading_[r] == grading_[c] ? 0 : 1;
        if (p == (parity & 1)) out.at(r, c) = at(r, c);
      }
    return out;
  }

  friend GradedMatrix kron(const GradedMatrix& a, const GradedMatrix& b);

 private:
  int dim_;
  std::vector<int> grading_;
  std::vector<GaussianRational> a_;  // row-major
};

inline GradedMatrix kron(const GradedMatrix& a, const GradedMatrix& b) {
  const int d = a.dim_ * b.dim_;
  std::vector<int> g(static_cast<std::size_t>(d));
  for (int r1 = 0; r1 < a.dim_; ++r1)
    for (int r2 = 0; r2 < b.dim_; ++r2) g[r1 * b.dim_ + r2] = a.grading_[r1] * b.grading_[r2];
  GradedMatrix out(d, std::move(g));
  for (int r1 = 0; r1 < a.dim_; ++r1)
    for (int c1 = 0; c1 < a.dim_; ++c1) {
      if (a.at(r1, c1).is_zero()) continue;
      for (int r2 = 0; r2 < b.dim_; ++r2)
        for (int c2 = 0; c2 < b.dim_; ++c2)
          out.at(r1 * b.dim_ + r2, c1 * b.dim_ + c2) = a.at(r1, c1) * b.at(r2, c2);
    }
  return out;
}

namespace detail {
// Diagonal of sigma3^{(x) m}: entry r is (-1)^{popcount r}.
inline std::vector<int> chirality_diagonal(int m) {
  std::vector<int> g(std::size_t{1} << m);
  for (std::size_t r = 0; r < g.size(); ++r)
    g[r] = (std::popcount(static_cast<std::uint32_t>(r)) & 1) ? -1 : 1;
  return g;
}
}  // namespace detail

// sigma1 = [[0,1],[1,0]], sigma2 = [[0,-i],[i,0]], sigma3 = [[1,0],[0,-1]],
// each graded by the chirality sigma3.
inline GradedMatrix pauli(int k) {
  GradedMatrix m(2, {1, -1});
  const GaussianRational one(1);
  const GaussianRational i = GaussianRational::imaginary_unit();
  switch (k) {
    case 1:
      m.at(0, 1) = one;
      m.at(1, 0) = one;
      break;
    case 2:
      m.at(0, 1) = -i;
      m.at(1, 0) = i;
      break;
    case 3:
      m.at(0, 0) = one;
      m.at(1, 1) = -one;
      break;
    default:
      throw std::invalid_argument("pauli index must be 1, 2 or 3");
  }
  return m;
}

// Gamma = sigma3 (x) ... (x) sigma3 (m factors); fixes the split S = S0 + S1.
inline GradedMatrix grading_operator(int m) {
  if (m < 1) throw std::invalid_argument("grading operator needs m >= 1");
  GradedMatrix g = pauli(3);
  for (int f = 1; f < m; ++f) g = kron(g, pauli(3));
  return g;
}

// gamma_{2j-1} -> sigma3^{(x)(j-1)} (x) sigma1 (x) I, gamma_{2j} likewise with
// sigma2. The sigma3 prefix realizes the graded tensor product: generators in
// distinct factors anticommute exactly.
inline GradedMatrix represent_generator(int i, int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("matrix representation needs even n (n = 2m)");
  if (n > 12) throw std::invalid_argument("matrix representation capped at n <= 12");
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range 1..n");
  const int m = n / 2;
  const int j = (i + 1) / 2;  // which 2x2 factor carries the generator
  GradedMatrix id2 = GradedMatrix::identity(2, {1, -1});
  GradedMatrix out(1, {1});
  out.at(0, 0) = GaussianRational(1);
  for (int f = 1; f <= m; ++f) {
    const GradedMatrix& factor = (f < j) ? pauli(3) : (f == j ? pauli(i % 2 == 1 ? 1 : 2) : id2);
    out = (f == 1) ? factor : kron(out, factor);
  }
  return out;
}

// Algebra homomorphism C_n -> End(S^n): unit to identity, parity preserved.
inline GradedMatrix represent(const CliffordElement& x) {
  const int n = x.ambient();
  if (n % 2 != 0) throw std::invalid_argument("matrix representation needs even n");
  if (n > 12) throw std::invalid_argument("matrix representation capped at n <= 12");
  const int m = n / 2;
  const int dim = 1 << m;
  std::vector<GradedMatrix> gens;
  gens.reserve(n);
  for (int i = 1; i <= n; ++i) gens.push_back(represent_generator(i, n));
  GradedMatrix out(dim, detail::chirality_diagonal(m));
  for (const auto& [bits, c] : x.terms()) {
    GradedMatrix mono = GradedMatrix::identity(dim, detail::chirality_diagonal(m));
    for (std::uint32_t b = bits; b; b &= b - 1) mono = mono * gens[std::countr_zero(b)];
    out += mono * c;
  }
  return out;
}

// Str(a) = Tr(Gamma a) for even a, 0 for odd a; mixed input is rejected.
inline GaussianRational supertrace(const GradedMatrix& a) {
  switch (a.homogeneity()) {
    case Degree::odd:
      return GaussianRational();
    case Degree::even: {
      GaussianRational t;
      for (int r = 0; r < a.dim(); ++r) {
        if (a.at(r, r).is_zero()) continue;
        t += a.grading()[r] == 1 ? a.at(r, r) : -a.at(r, r);
      }
      return t;
    }
    default:
      throw HomogeneityError("supertrace requires a homogeneous matrix");
  }
}

// Str(gamma_I) without matrices: (2i)^m when I = {1..n}, else 0.
inline GaussianRational supertrace_closed_form(const BasisIndex& I, int n) {
  if (n % 2 != 0) throw std::invalid_argument("supertrace closed form needs even n");
  if (I.n != n)
    throw AmbientMismatch("ambient mismatch: basis n=" + std::to_string(I.n) + " vs n=" +
                          std::to_string(n));
  if (!I.is_full()) return GaussianRational();
  return GaussianRational::two_i_pow(static_cast<unsigned>(n / 2));
}

// [a,b] = ab - (-1)^{|a||b|} ba for homogeneous matrices.
inline GradedMatrix graded_matrix_commutator(const GradedMatrix& a, const GradedMatrix& b) {
  Degree da = a.homogeneity(), db = b.homogeneity();
  if (da == Degree::mixed || db == Degree::mixed)
    throw HomogeneityError("graded commutator requires homogeneous matrices");
  GradedMatrix fwd = a * b;
  GradedMatrix bwd = b * a;
  return (parity_of(da) & parity_of(db)) ? fwd + bwd : fwd - bwd;
}

}  // namespace cnlie
