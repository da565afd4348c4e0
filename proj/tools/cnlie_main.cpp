// Command-line front end: graded binary/ternary brackets, structure-constant
// table export, supertraces, spinor representations, and identity verifiers.
//
// Exit codes: 0 pass, 1 I/O failure, 2 usage/parse error, 3 verification
// violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnlie/cnlie.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct Options {
  int n = 2;
  int arity = 2;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  int workers = 1;
  std::string out = "-";
  bool via_matrix = false;
  std::string check;
  std::vector<std::string> expressions;
};

void require_even(int n) {
  if (n % 2 != 0) throw std::invalid_argument("this command needs even n (n = 2m)");
}

int run_bracket(const Options& opt) {
  if (opt.arity != 2 && opt.arity != 3)
    throw std::invalid_argument("bracket arity must be 2 or 3");
  if (static_cast<int>(opt.expressions.size()) != opt.arity)
    throw std::invalid_argument("expected " + std::to_string(opt.arity) + " expressions, got " +
                                std::to_string(opt.expressions.size()));
  std::vector<cnlie::CliffordElement> args;
  args.reserve(opt.expressions.size());
  for (const auto& text : opt.expressions) args.push_back(cnlie::parse_element(text, opt.n));
  cnlie::CliffordElement result =
      opt.arity == 2 ? cnlie::graded_commutator(args[0], args[1])
                     : cnlie::ternary_bracket(args[0], args[1], args[2]);
  std::cout << cnlie::element_to_json(result).dump() << '\n';
  return kExitOk;
}

int run_table(const Options& opt) {
  require_even(opt.n);
  if (opt.out == "-") {
    cnlie::write_table_jsonl(std::cout, opt.n, opt.arity, opt.workers);
    return std::cout ? kExitOk : kExitIo;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file: " << opt.out << '\n';
    return kExitIo;
  }
  cnlie::write_table_jsonl(file, opt.n, opt.arity, opt.workers);
  file.flush();
  if (!file) {
    std::cerr << "error: write failed: " << opt.out << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int run_str(const Options& opt) {
  require_even(opt.n);
  if (opt.expressions.size() != 1) throw std::invalid_argument("expected exactly one expression");
  cnlie::CliffordElement x = cnlie::parse_element(opt.expressions.front(), opt.n);
  cnlie::GaussianRational value;
  if (opt.via_matrix) {
    for (int p = 0; p < 2; ++p) {
      cnlie::CliffordElement part = x.parity_part(p);
      if (!part.is_zero()) value += cnlie::supertrace(cnlie::represent(part));
    }
  } else {
    value = cnlie::TraceForm::clifford_supertrace(opt.n)(x);
  }
  std::cout << cnlie::gaussian_to_json(value).dump() << '\n';
  return kExitOk;
}

int run_rep(const Options& opt) {
  require_even(opt.n);
  if (opt.expressions.size() != 1) throw std::invalid_argument("expected exactly one expression");
  cnlie::CliffordElement x = cnlie::parse_element(opt.expressions.front(), opt.n);
  std::cout << cnlie::matrix_to_json(cnlie::represent(x)).dump() << '\n';
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

cnlie::BracketTable clifford_binary_table(int n) {
  return cnlie::materialize_table(2, cnlie::GradedBasisSpec::clifford(n), n,
                                  [&](const std::vector<int>& t) {
                                    using cnlie::BasisIndex;
                                    using cnlie::CliffordElement;
                                    return cnlie::to_sparse(cnlie::graded_commutator(
                                        CliffordElement::monomial(BasisIndex(t[0], n)),
                                        CliffordElement::monomial(BasisIndex(t[1], n))));
                                  });
}

cnlie::BracketTable clifford_ternary_table(int n) {
  return cnlie::materialize_table(3, cnlie::GradedBasisSpec::clifford(n), n,
                                  [&](const std::vector<int>& t) {
                                    using cnlie::BasisIndex;
                                    using cnlie::CliffordElement;
                                    return cnlie::to_sparse(cnlie::ternary_bracket(
                                        CliffordElement::monomial(BasisIndex(t[0], n)),
                                        CliffordElement::monomial(BasisIndex(t[1], n)),
                                        CliffordElement::monomial(BasisIndex(t[2], n))));
                                  });
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int emit_report(const cnlie::json& report, bool passed) {
  std::cout << report.dump() << '\n';
  return passed ? kExitOk : kExitViolation;
}

int run_verify(const Options& opt) {
  using cnlie::BasisIndex;
  using cnlie::CliffordElement;
  const int n = opt.n;
  const bool sampled = opt.mode == "sampled";
  if (!sampled && opt.mode != "exhaustive")
    throw std::invalid_argument("mode must be 'exhaustive' or 'sampled'");
  std::optional<cnlie::SampleMode> mode;
  if (sampled) mode = cnlie::SampleMode{opt.samples, opt.seed};

  auto base = [&](const char* name) {
    cnlie::json j{{"check", name}, {"n", n}, {"mode", opt.mode}};
    if (sampled) {
      j["seed"] = opt.seed;
      j["samples"] = opt.samples;
    }
    return j;
  };

  if (opt.check == "assoc") {
    require_range(sampled || n <= 6, "exhaustive assoc check supports n <= 6");
    cnlie::CheckReport report{"assoc", 0, {}};
    const int d = 1 << n;
    cnlie::detail::for_each_tuple(3, d, mode, [&](const std::vector<int>& t) {
      ++report.checked;
      CliffordElement a = CliffordElement::monomial(BasisIndex(t[0], n));
      CliffordElement b = CliffordElement::monomial(BasisIndex(t[1], n));
      CliffordElement c = CliffordElement::monomial(BasisIndex(t[2], n));
      CliffordElement lhs = cnlie::multiply(cnlie::multiply(a, b), c);
      CliffordElement rhs = cnlie::multiply(a, cnlie::multiply(b, c));
      if (lhs != rhs)
        report.violations.push_back({t, cnlie::to_sparse(lhs), cnlie::to_sparse(rhs), ""});
    });
    cnlie::json j = base("assoc");
    j.update(cnlie::report_to_json(report, n));
    return emit_report(j, report.passed());
  }

  if (opt.check == "degree" || opt.check == "skew") {
    require_range(!sampled, "check '" + opt.check + "' is exhaustive-only");
    cnlie::BracketTable tbl;
    if (opt.arity == 2) {
      require_range(n <= 8, "binary table checks support n <= 8");
      tbl = clifford_binary_table(n);
    } else if (opt.arity == 3) {
      require_even(n);
      require_range(n <= 6, "ternary table checks support even n <= 6");
      tbl = clifford_ternary_table(n);
    } else {
      throw std::invalid_argument("arity must be 2 or 3");
    }
    cnlie::CheckReport report = opt.check == "degree" ? cnlie::check_degree_additivity(tbl)
                                                      : cnlie::check_graded_skew(tbl);
    cnlie::json j = base(opt.check.c_str());
    j["arity"] = opt.arity;
    j.update(cnlie::report_to_json(report, n));
    return emit_report(j, report.passed());
  }

  if (opt.check == "filippov2" || opt.check == "filippov3") {
    cnlie::BracketTable tbl;
    if (opt.check == "filippov2") {
      require_range(sampled ? n <= 8 : n <= 6,
                    "filippov2 supports n <= 6 exhaustive, n <= 8 sampled");
      tbl = clifford_binary_table(n);
    } else {
      require_even(n);
      require_range(sampled ? n <= 6 : n <= 4,
                    "filippov3 supports n in {2,4} exhaustive, even n <= 6 sampled");
      tbl = clifford_ternary_table(n);
    }
    cnlie::CheckReport report = cnlie::check_graded_filippov(tbl, mode);
    cnlie::json j = base(opt.check.c_str());
    j.update(cnlie::report_to_json(report, n));
    j["check"] = opt.check;
    return emit_report(j, report.passed());
  }

  if (opt.check == "hom") {
    require_even(n);
    require_range(n <= 6, "representation homomorphism check supports even n <= 6");
    require_range(!sampled, "check 'hom' is exhaustive-only");
    cnlie::json violations = cnlie::json::array();
    std::uint64_t checked = 0;
    const std::uint32_t d = 1u << n;
    std::vector<cnlie::GradedMatrix> rep;
    rep.reserve(d);
    for (std::uint32_t i = 0; i < d; ++i)
      rep.push_back(cnlie::represent(CliffordElement::monomial(BasisIndex(i, n))));
    for (std::uint32_t a = 0; a < d; ++a)
      for (std::uint32_t b = 0; b < d; ++b) {
        ++checked;
        auto [sign, K] = cnlie::basis_product(BasisIndex(a, n), BasisIndex(b, n));
        cnlie::GradedMatrix expect = rep[K.bits] * cnlie::GaussianRational(sign);
        if (!(rep[a] * rep[b] == expect))
          violations.push_back(cnlie::json{
              {"tuple", cnlie::tuple_to_json({static_cast<int>(a), static_cast<int>(b)}, n)},
              {"lhs", cnlie::matrix_to_json(rep[a] * rep[b])},
              {"rhs", cnlie::matrix_to_json(expect)}});
      }
    cnlie::json j = base("hom");
    j["checked"] = checked;
    j["passed"] = violations.empty();
    j["violations"] = violations;
    return emit_report(j, violations.empty());
  }

  if (opt.check == "strtable") {
    require_even(n);
    require_range(n <= 8, "supertrace table check supports even n <= 8");
    require_range(!sampled, "check 'strtable' is exhaustive-only");
    cnlie::json violations = cnlie::json::array();
    std::uint64_t checked = 0;
    const std::uint32_t d = 1u << n;
    for (std::uint32_t i = 0; i < d; ++i) {
      ++checked;
      const BasisIndex I(i, n);
      cnlie::GaussianRational via_matrix =
          cnlie::supertrace(cnlie::represent(CliffordElement::monomial(I)));
      cnlie::GaussianRational closed = cnlie::supertrace_closed_form(I, n);
      if (!(via_matrix == closed))
        violations.push_back(cnlie::json{{"tuple", cnlie::tuple_to_json({static_cast<int>(i)}, n)},
                                         {"lhs", cnlie::gaussian_to_json(via_matrix)},
                                         {"rhs", cnlie::gaussian_to_json(closed)}});
    }
    cnlie::json j = base("strtable");
    j["checked"] = checked;
    j["passed"] = violations.empty();
    j["violations"] = violations;
    return emit_report(j, violations.empty());
  }

  if (opt.check == "theorem14") {
    require_range(!sampled, "check 'theorem14' is exhaustive-only");
    cnlie::Theorem14Report report = cnlie::verify_theorem14(n);
    cnlie::json j = base("theorem14");
    j.update(cnlie::theorem14_report_to_json(report));
    return emit_report(j, report.passed());
  }

  throw std::invalid_argument(
      "unknown check '" + opt.check +
      "' (expected assoc, degree, skew, filippov2, filippov3, hom, strtable, theorem14)");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact Clifford superalgebra and induced super 3-Lie brackets"};
  app.require_subcommand(1);

  auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "ambient generator count")->required();
  };

  CLI::App* bracket = app.add_subcommand("bracket", "graded binary or ternary bracket");
  add_shared(bracket);
  bracket->add_option("--arity", opt.arity, "bracket arity (2 or 3)")->required();
  bracket->add_option("exprs", opt.expressions, "element expressions")->expected(-1);

  CLI::App* table = app.add_subcommand("table", "export a structure-constant table as JSONL");
  add_shared(table);
  table->add_option("--arity", opt.arity, "bracket arity (2 or 3)")->required();
  table->add_option("--out", opt.out, "output path, '-' for standard output");
  table->add_option("--workers", opt.workers, "worker threads for table generation");

  CLI::App* str = app.add_subcommand("str", "supertrace of an element");
  add_shared(str);
  str->add_flag("--via-matrix", opt.via_matrix, "evaluate through the matrix representation");
  str->add_option("expr", opt.expressions, "element expression")->expected(1);

  CLI::App* rep = app.add_subcommand("rep", "spinor matrix representation of an element");
  add_shared(rep);
  rep->add_option("expr", opt.expressions, "element expression")->expected(1);

  CLI::App* verify = app.add_subcommand("verify", "run an identity verifier");
  add_shared(verify);
  verify->add_option("--check", opt.check, "one of assoc, degree, skew, filippov2, filippov3, hom, strtable, theorem14")
      ->required();
  verify->add_option("--mode", opt.mode, "exhaustive or sampled");
  verify->add_option("--seed", opt.seed, "seed for sampled mode");
  verify->add_option("--samples", opt.samples, "tuple count for sampled mode");
  verify->add_option("--arity", opt.arity, "table arity for degree/skew checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (bracket->parsed()) return run_bracket(opt);
    if (table->parsed()) return run_table(opt);
    if (str->parsed()) return run_str(opt);
    if (rep->parsed()) return run_rep(opt);
    if (verify->parsed()) {
      if (verify->count("--arity") == 0) opt.arity = 3;
      return run_verify(opt);
    }
  } catch (const cnlie::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
