// Black-box contract tests for the command-line tool.
// Usage: cli_contract <path-to-cli-binary>
// Checks the documented exit codes (0 ok, 1 i/o, 2 usage/parse, 3 violation)
// and the JSON shapes printed on standard output.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

std::string g_cli;
int g_failures = 0;
int g_checks = 0;

void expect(bool ok, const std::string& what) {
  ++g_checks;
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << '\n';
  }
}

struct CommandOutput {
  int exit_code = -1;
  std::string out;
};

CommandOutput run(const std::string& args) {
  CommandOutput result;
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  int rc = pclose(pipe);
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

json parse_single_json(const CommandOutput& r, const std::string& what) {
  try {
    return json::parse(r.out);
  } catch (const std::exception&) {
    expect(false, what + ": output is not a single JSON document: " + r.out);
    return json();
  }
}

void test_bracket() {
  CommandOutput r = run("bracket --n 2 --arity 2 'g{1}' 'g{1,2}'");
  expect(r.exit_code == 0, "binary bracket exits 0");
  expect(parse_single_json(r, "bracket") ==
             json::parse(R"({"n":2,"terms":[{"I":[2],"im":"0/1","re":"2/1"}]})"),
         "[gamma_1, gamma_12] = 2 gamma_2");

  r = run("bracket --n 2 --arity 3 'g{1}' 'g{1}' 'g{1,2}'");
  expect(r.exit_code == 0, "ternary bracket exits 0");
  expect(parse_single_json(r, "bracket3") ==
             json::parse(R"({"n":2,"terms":[{"I":[],"im":"4/1","re":"0/1"}]})"),
         "[gamma_1, gamma_1, gamma_12] = 4i e");

  r = run("bracket --n 2 --arity 2 'e' 'g{1}'");
  expect(r.exit_code == 0, "unit bracket exits 0");
  expect(parse_single_json(r, "unit bracket") == json::parse(R"({"n":2,"terms":[]})"),
         "[e, gamma_1] = 0");

  expect(run("bracket --n 2 --arity 2 'g{3}' 'e'").exit_code == 2,
         "out-of-range generator exits 2");
  expect(run("bracket --n 2 --arity 2 'g{1'").exit_code == 2, "missing expression exits 2");
  expect(run("bracket --n 2 --arity 3 'e' 'e'").exit_code == 2, "arity mismatch exits 2");
  expect(run("bracket --n 3 --arity 3 'e' 'e' 'e'").exit_code == 2, "odd n ternary exits 2");
}

void test_str() {
  CommandOutput r = run("str --n 4 'g{1,2,3,4}'");
  expect(r.exit_code == 0, "str exits 0");
  expect(parse_single_json(r, "str") == json::parse(R"({"im":"0/1","re":"-4/1"})"),
         "Str(gamma_N) = (2i)^2 = -4 at n=4");

  r = run("str --n 2 'g{1}'");
  expect(parse_single_json(r, "str odd") == json::parse(R"({"im":"0/1","re":"0/1"})"),
         "Str of an odd monomial vanishes");

  r = run("str --n 2 'e + g{1,2}'");
  expect(parse_single_json(r, "str linear") == json::parse(R"({"im":"2/1","re":"0/1"})"),
         "Str is linear over terms");

  CommandOutput via_matrix = run("str --n 2 --via-matrix 'e + g{1,2}'");
  expect(via_matrix.out == r.out, "--via-matrix agrees with the closed form");

  expect(run("str --n 3 'e'").exit_code == 2, "odd n exits 2");
}

void test_rep() {
  CommandOutput r = run("rep --n 2 'g{1,2}'");
  expect(r.exit_code == 0, "rep exits 0");
  json j = parse_single_json(r, "rep");
  expect(j.at("m") == 1, "rep reports m = 1");
  expect(j.at("rows")[0][0] == json::parse(R"({"im":"1/1","re":"0/1"})") &&
             j.at("rows")[1][1] == json::parse(R"({"im":"-1/1","re":"0/1"})"),
         "rep(gamma_12) = i sigma_3");
  expect(run("rep --n 5 'e'").exit_code == 2, "odd n rep exits 2");
}

void test_verify() {
  CommandOutput r = run("verify --n 2 --check filippov3 --mode exhaustive");
  expect(r.exit_code == 0, "filippov3 n=2 passes");
  json j = parse_single_json(r, "filippov3");
  expect(j.at("check") == "filippov3", "report names the requested check");
  expect(j.at("checked") == 1024, "filippov3 n=2 checks 1024 tuples");
  expect(j.at("passed") == true && j.at("violations").empty(), "filippov3 report is clean");

  r = run("verify --n 4 --check filippov3 --mode sampled --seed 1 --samples 2000");
  expect(r.exit_code == 0, "sampled filippov3 n=4 passes");
  expect(parse_single_json(r, "sampled").at("checked") == 2000, "sampled count honored");
  CommandOutput again = run("verify --n 4 --check filippov3 --mode sampled --seed 1 --samples 2000");
  expect(again.out == r.out, "sampled verification is deterministic for a fixed seed");

  r = run("verify --n 4 --check strtable");
  expect(r.exit_code == 0, "strtable n=4 passes");
  expect(parse_single_json(r, "strtable").at("checked") == 16, "strtable checks 16 monomials");

  r = run("verify --n 4 --check theorem14");
  expect(r.exit_code == 0, "theorem14 n=4 passes");
  j = parse_single_json(r, "theorem14");
  expect(j.at("checked") == 4096, "theorem14 n=4 checks 4096 triples");
  expect(!j.at("literal_disagreements").empty(), "literal-reading disagreements are enumerated");

  expect(run("verify --n 2 --check skew").exit_code == 0, "ternary skew check passes");
  expect(run("verify --n 2 --check degree --arity 2").exit_code == 0, "binary degree check passes");
  expect(run("verify --n 4 --check hom").exit_code == 0, "hom check passes");
  expect(run("verify --n 4 --check assoc").exit_code == 0, "assoc check passes");
  expect(run("verify --n 3 --check filippov2").exit_code == 0, "filippov2 works at odd n");

  expect(run("verify --n 2 --check bogus").exit_code == 2, "unknown check exits 2");
  expect(run("verify --n 3 --check theorem14").exit_code == 2, "theorem14 odd n exits 2");
  expect(run("verify --n 2 --check filippov3 --mode nonsense").exit_code == 2,
         "unknown mode exits 2");
  expect(run("verify --n 2").exit_code == 2, "missing --check exits 2");
}

void test_table() {
  const std::string path_a = "/tmp/cnlie_contract_a.jsonl";
  const std::string path_b = "/tmp/cnlie_contract_b.jsonl";
  expect(run("table --n 2 --arity 3 --out " + path_a).exit_code == 0, "table write exits 0");
  expect(run("table --n 2 --arity 3 --workers 3 --out " + path_b).exit_code == 0,
         "table write with workers exits 0");

  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string bytes_a = slurp(path_a);
  expect(!bytes_a.empty() && bytes_a == slurp(path_b), "table bytes identical across workers");

  std::istringstream is(bytes_a);
  std::string line;
  int lines = 0;
  bool every_line_parses = true;
  while (std::getline(is, line)) {
    ++lines;
    try {
      (void)json::parse(line);
    } catch (const std::exception&) {
      every_line_parses = false;
    }
  }
  expect(lines == 65, "ternary table at n=2 is 64 records plus a header");
  expect(every_line_parses, "every JSONL line is valid JSON");

  CommandOutput stdout_run = run("table --n 2 --arity 3");
  expect(stdout_run.exit_code == 0 && stdout_run.out == bytes_a,
         "stdout stream matches the file bytes");

  expect(run("table --n 2 --arity 3 --out /nonexistent-dir/t.jsonl").exit_code == 1,
         "unwritable path exits 1");
  expect(run("table --n 3 --arity 2").exit_code == 2, "odd n table exits 2");

  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
}

void test_usage() {
  expect(run("").exit_code == 2, "missing subcommand exits 2");
  expect(run("bracket --arity 2 'e' 'e'").exit_code == 2, "missing --n exits 2");
  expect(run("frobnicate").exit_code == 2, "unknown subcommand exits 2");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_contract <path-to-cli-binary>\n";
    return 2;
  }
  g_cli = argv[1];

  test_bracket();
  test_str();
  test_rep();
  test_verify();
  test_table();
  test_usage();

  std::printf("cli_contract: %d/%d checks passed\n", g_checks - g_failures, g_checks);
  return g_failures == 0 ? 0 : 1;
}
