#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cnlie/table.hpp"

namespace cnlie {

struct Violation {
  std::vector<int> tuple;  // flat basis indices, in the order fed to the check
  SparseVec lhs, rhs;
  std::string detail;
};

struct CheckReport {
  std::string check;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

// Deterministic sampling parameters; absent means exhaustive enumeration.
struct SampleMode {
  std::uint64_t count = 10000;
  std::uint64_t seed = 0;
};

namespace detail {

// Uniform index draw via rejection, stable across platforms for a fixed seed.
inline int uniform_index(std::mt19937_64& rng, int d) {
  const std::uint64_t du = static_cast<std::uint64_t>(d);
  const std::uint64_t bound = (~std::uint64_t{0} / du) * du;
  std::uint64_t v = rng();
  while (v >= bound) v = rng();
  return static_cast<int>(v % du);
}

template <class Fn>
void for_each_tuple(int width, int dim, const std::optional<SampleMode>& mode, Fn&& fn) {
  std::vector<int> tuple(static_cast<std::size_t>(width), 0);
  if (mode) {
    std::mt19937_64 rng(mode->seed);
    for (std::uint64_t s = 0; s < mode->count; ++s) {
      for (auto& t : tuple) t = uniform_index(rng, dim);
      fn(tuple);
    }
    return;
  }
  while (true) {
    fn(tuple);
    int slot = width - 1;
    while (slot >= 0 && ++tuple[slot] == dim) tuple[slot--] = 0;
    if (slot < 0) break;
  }
}

}  // namespace detail

// Every nonzero output term must carry the parity sum of the inputs.
inline CheckReport check_degree_additivity(const BracketTable& tbl) {
  CheckReport report{"degree", 0, {}};
  for (const auto& [tuple, value] : tbl.entries) {
    ++report.checked;
    const int want = tbl.tuple_parity(tuple);
    for (const auto& [b, c] : value) {
      if (tbl.basis.degrees[b] != want) {
        report.violations.push_back({tuple, value, {},
                                     "output term of parity " +
                                         std::to_string(tbl.basis.degrees[b]) +
                                         ", inputs sum to " + std::to_string(want)});
        break;
      }
    }
  }
  return report;
}

// entry(..., x_{k+1}, x_k, ...) = -(-1)^{|x_k||x_{k+1}|} entry(..., x_k, x_{k+1}, ...)
// for every stored tuple and every adjacent transposition.
inline CheckReport check_graded_skew(const BracketTable& tbl) {
  CheckReport report{"skew", 0, {}};
  for (const auto& [tuple, value] : tbl.entries) {
    for (int k = 0; k + 1 < tbl.arity; ++k) {
      ++report.checked;
      std::vector<int> swapped = tuple;
      std::swap(swapped[k], swapped[k + 1]);
      int sign = tbl.basis.degrees[tuple[k]] & tbl.basis.degrees[tuple[k + 1]];
      SparseVec expect = sv_scale(value, GaussianRational(sign ? 1 : -1));
      if (tbl.entry(swapped) != expect)
        report.violations.push_back({tuple, tbl.entry(swapped), expect,
                                     "adjacent transposition at slot " + std::to_string(k)});
    }
  }
  return report;
}

// Graded Filippov identity over tuples (y_1..y_{r-1}, x_1..x_r):
//   [y, [x_1..x_r]] = sum_k (-1)^{|x|_{k-1}|y|_{r-1}} [x_1.., [y, x_k], ..x_r].
// For an all-even basis this is the classical identity. Exhaustive by
// default; sampled mode draws tuples from a seeded generator.
inline CheckReport check_graded_filippov(const BracketTable& tbl,
                                         const std::optional<SampleMode>& mode = std::nullopt) {
  CheckReport report{"filippov", 0, {}};
  const int r = tbl.arity;
  const int yc = r - 1;
  const int d = tbl.basis.dim();
  detail::for_each_tuple(2 * r - 1, d, mode, [&](const std::vector<int>& tuple) {
    ++report.checked;
    std::vector<int> ys(tuple.begin(), tuple.begin() + yc);
    std::vector<int> xs(tuple.begin() + yc, tuple.end());
    int ydeg = 0;
    for (int y : ys) ydeg ^= tbl.basis.degrees[y];

    auto unit_vec = [](int b) { return SparseVec{{b, GaussianRational(1)}}; };

    // lhs: outer bracket with the inner bracket in the last slot
    std::vector<SparseVec> outer_args;
    outer_args.reserve(r);
    for (int y : ys) outer_args.push_back(unit_vec(y));
    outer_args.push_back(tbl.entry(xs));
    SparseVec lhs = eval_table(tbl, outer_args);

    // rhs: substitute [y, x_k] into slot k with the prefix sign
    SparseVec rhs;
    int prefix = 0;
    for (int k = 0; k < r; ++k) {
      std::vector<int> inner_tuple = ys;
      inner_tuple.push_back(xs[k]);
      std::vector<SparseVec> args;
      args.reserve(r);
      for (int j = 0; j < r; ++j)
        args.push_back(j == k ? tbl.entry(inner_tuple) : unit_vec(xs[j]));
      SparseVec term = eval_table(tbl, args);
      sv_accumulate(rhs, term, GaussianRational((prefix & ydeg) ? -1 : 1));
      prefix ^= tbl.basis.degrees[xs[k]];
    }

    if (lhs != rhs) report.violations.push_back({tuple, lhs, rhs, ""});
  });
  return report;
}

// Invariance condition for a k-form phi against a binary bracket:
//   sum_m phi(x_1, ..., [x_m, y], ..., x_k) = 0 over all basis tuples.
// Violations carry the offending tuple (x_1..x_k, y) and the nonzero sum.
template <class E, class Phi, class Bracket>
CheckReport check_phi_condition(const std::vector<E>& basis, int k, Phi&& phi, Bracket&& bracket) {
  if (k < 1) throw std::invalid_argument("phi condition needs k >= 1");
  CheckReport report{"phi", 0, {}};
  const int d = static_cast<int>(basis.size());
  detail::for_each_tuple(k + 1, d, std::nullopt, [&](const std::vector<int>& tuple) {
    ++report.checked;
    const E& y = basis[tuple.back()];
    GaussianRational sum;
    for (int m = 0; m < k; ++m) {
      std::vector<E> args;
      args.reserve(k);
      for (int j = 0; j < k; ++j)
        args.push_back(j == m ? bracket(basis[tuple[j]], y) : basis[tuple[j]]);
      sum += phi(args);
    }
    if (!sum.is_zero())
      report.violations.push_back({tuple, SparseVec{{0, sum}}, {}, "nonzero invariance sum"});
  });
  return report;
}

}  // namespace cnlie
