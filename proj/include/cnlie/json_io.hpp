#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cnlie/checks.hpp"
#include "cnlie/element.hpp"
#include "cnlie/errors.hpp"
#include "cnlie/spinor.hpp"
#include "cnlie/table.hpp"
#include "cnlie/ternary.hpp"

namespace cnlie {

using json = nlohmann::json;

// ---- scalars ----------------------------------------------------------

inline json gaussian_to_json(const GaussianRational& z) {
  return json{{"re", rational_to_string(z.re)}, {"im", rational_to_string(z.im)}};
}

inline GaussianRational gaussian_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw std::domain_error("expected {\"re\", \"im\"} object");
  return {parse_rational(j.at("re").get<std::string>()),
          parse_rational(j.at("im").get<std::string>())};
}

// ---- elements ---------------------------------------------------------

// {"n": n, "terms": [{"I": [sorted ints], "re": "p/q", "im": "p/q"}, ...]},
// terms ascending by bitmask, rationals in lowest terms, no zero terms.
inline json element_to_json(const CliffordElement& x) {
  json terms = json::array();
  for (const auto& [bits, c] : x.terms()) {
    json t = gaussian_to_json(c);
    t["I"] = BasisIndex(bits, x.ambient()).generators();
    terms.push_back(std::move(t));
  }
  return json{{"n", x.ambient()}, {"terms", std::move(terms)}};
}

inline CliffordElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw std::domain_error("expected {\"n\", \"terms\"} object");
  CliffordElement x(j.at("n").get<int>());
  for (const json& t : j.at("terms")) {
    std::vector<int> gens = t.at("I").get<std::vector<int>>();
    BasisIndex I = BasisIndex::from_generators(gens, x.ambient());
    if (static_cast<int>(gens.size()) != I.cardinality())
      throw std::domain_error("duplicate generator in basis index");
    x.add_term(I.bits, gaussian_from_json(t));
  }
  return x;
}

// ---- matrices ---------------------------------------------------------

// {"m": m, "rows": [[{"re","im"}, ...], ...]} for 2^m-dimensional matrices.
inline json matrix_to_json(const GradedMatrix& a) {
  int m = 0;
  while ((1 << m) < a.dim()) ++m;
  if ((1 << m) != a.dim()) throw std::domain_error("matrix dimension is not a power of two");
  json rows = json::array();
  for (int r = 0; r < a.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < a.dim(); ++c) row.push_back(gaussian_to_json(a.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"m", m}, {"rows", std::move(rows)}};
}

// ---- tables and reports -------------------------------------------------

inline json sparse_to_json(const SparseVec& v, int clifford_n) {
  if (clifford_n > 0) return element_to_json(from_sparse(v, clifford_n));
  json out = json::array();
  for (const auto& [b, c] : v) {
    json t = gaussian_to_json(c);
    t["b"] = b;
    out.push_back(std::move(t));
  }
  return out;
}

inline json tuple_to_json(const std::vector<int>& tuple, int clifford_n) {
  json out = json::array();
  for (int b : tuple) {
    if (clifford_n > 0)
      out.push_back(BasisIndex(static_cast<std::uint32_t>(b), clifford_n).generators());
    else
      out.push_back(b);
  }
  return out;
}

inline json violation_to_json(const Violation& v, int clifford_n) {
  json out{{"tuple", tuple_to_json(v.tuple, clifford_n)},
           {"lhs", sparse_to_json(v.lhs, clifford_n)},
           {"rhs", sparse_to_json(v.rhs, clifford_n)}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

inline json report_to_json(const CheckReport& r, int clifford_n) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(violation_to_json(v, clifford_n));
  return json{{"check", r.check},
              {"checked", r.checked},
              {"passed", r.passed()},
              {"violations", std::move(violations)}};
}

inline json theorem14_report_to_json(const Theorem14Report& r) {
  auto mismatch_json = [&](const Theorem14Mismatch& mm) {
    json tuple = json::array();
    for (std::uint32_t bits : mm.triple) tuple.push_back(BasisIndex(bits, r.n).generators());
    return json{{"tuple", std::move(tuple)},
                {"bracket", element_to_json(mm.bracket)},
                {"other", element_to_json(mm.other)}};
  };
  json mismatches = json::array();
  for (const auto& mm : r.mismatches) mismatches.push_back(mismatch_json(mm));
  json literal = json::array();
  for (const auto& mm : r.literal_disagreements) literal.push_back(mismatch_json(mm));
  return json{{"check", "theorem14"},
              {"n", r.n},
              {"convention", "canonical-K"},
              {"checked", r.checked},
              {"passed", r.passed()},
              {"violations", std::move(mismatches)},
              {"literal_disagreements", std::move(literal)}};
}

// ---- structure-constant export ----------------------------------------

// JSONL: a metadata header line, then one record per ordered basis tuple in
// lexicographic order: {"inputs": [[...], ...], "output": <element JSON>}.
// The tuple space may be partitioned across threads; shards are concatenated
// in index order, so the bytes do not depend on the worker count.
inline void write_table_jsonl(std::ostream& os, int n, int arity, int workers = 1) {
  if (arity != 2 && arity != 3) throw std::invalid_argument("table arity must be 2 or 3");
  if (n % 2 != 0) throw std::invalid_argument("structure table export needs even n");
  if (arity == 3 && n > 8) throw std::invalid_argument("arity-3 table export capped at n <= 8");
  if (workers < 1) throw std::invalid_argument("worker count must be positive");

  json header{{"n", n}, {"m", n / 2}, {"arity", arity}};
  if (arity == 3) header["convention"] = "canonical-K";
  os << header.dump() << '\n';

  TernaryStructureTable ternary;
  if (arity == 3) ternary = build_structure_table(n);

  const std::uint64_t d = std::uint64_t{1} << n;
  std::uint64_t total = 1;
  for (int k = 0; k < arity; ++k) total *= d;

  auto render_range = [&](std::uint64_t begin, std::uint64_t end, std::string& out) {
    for (std::uint64_t flat = begin; flat < end; ++flat) {
      std::uint32_t idx[3] = {0, 0, 0};
      std::uint64_t rest = flat;
      for (int k = arity - 1; k >= 0; --k) {
        idx[k] = static_cast<std::uint32_t>(rest % d);
        rest /= d;
      }
      CliffordElement value(n);
      json inputs = json::array();
      if (arity == 2) {
        const BasisIndex I(idx[0], n), J(idx[1], n);
        inputs.push_back(I.generators());
        inputs.push_back(J.generators());
        value = graded_commutator(CliffordElement::monomial(I), CliffordElement::monomial(J));
      } else {
        const BasisIndex I(idx[0], n), J(idx[1], n), K(idx[2], n);
        inputs.push_back(I.generators());
        inputs.push_back(J.generators());
        inputs.push_back(K.generators());
        value = ternary.lookup(I, J, K);
      }
      json line{{"inputs", std::move(inputs)}, {"output", element_to_json(value)}};
      out += line.dump();
      out += '\n';
    }
  };

  const int w = static_cast<int>(std::min<std::uint64_t>(workers, total));
  std::vector<std::string> shards(static_cast<std::size_t>(w));
  if (w == 1) {
    render_range(0, total, shards[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t) {
      std::uint64_t begin = total * t / w;
      std::uint64_t end = total * (t + 1) / w;
      pool.emplace_back([&, begin, end, t] { render_range(begin, end, shards[t]); });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& shard : shards) os << shard;
}

}  // namespace cnlie
