#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "detrep/parse.hpp"
#include "detrep/pencil.hpp"
#include "test_util.hpp"

using namespace detrep;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// runs the tool with the polynomial on stdin; stderr goes to /dev/null
RunResult run_cli(const std::string& poly, const std::string& flags) {
  const char* bin = std::getenv("DETREP_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = "printf '%s' \"" + poly + "\" | " + std::string(bin) + " " + flags +
                    " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), got);
  int status = pclose(f);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_rows(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("improved-chain ndr of the squared binomial is 5x5 and verified") {
  RunResult r = run_cli("x1^2+2*x1*x2+x2^2", "--form ndr --chain improved");
  CHECK(r.exit_code == 0);
  CHECK(count_rows(r.out) == 5);
}

TEST_CASE("plain-chain ndr of the same polynomial is 6x6") {
  RunResult r = run_cli("x1^2+2*x1*x2+x2^2", "--form ndr --chain plain");
  CHECK(r.exit_code == 0);
  CHECK(count_rows(r.out) == 6);
}

TEST_CASE("zero polynomial gives the 1x1 zero matrix") {
  RunResult r = run_cli("0", "--form ndr");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[ 0 ]\n");
}

TEST_CASE("rdr run verifies") {
  RunResult r = run_cli("3*x1^3*x2^2 - 4*x1^2*x2^3 + x1^2*x2^2 - 5*x1*x2^2 + 2*x1^3 + 2*x1*x2",
                        "--form rdr");
  CHECK(r.exit_code == 0);
  CHECK(count_rows(r.out) >= 6);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("x1 + ", "--form ndr").exit_code == 1);       // grammar error
  CHECK(run_cli("[c]*x1", "--form ndr").exit_code == 3);      // symbols need udr
  CHECK(run_cli("x1", "--form frobnicate").exit_code == 3);   // bad flag value
  CHECK(run_cli("x1", "--form udr").exit_code == 0);
  CHECK(run_cli("x1", "--form udr --chain plain").exit_code == 3);
}

TEST_CASE("dump-chain emits the chain form on stderr only") {
  const char* bin = std::getenv("DETREP_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string("printf 'x1^2+1' | ") + bin +
                    " --form ndr --dump-chain 2>&1 1>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string err;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) err.append(buf.data(), got);
  pclose(f);
  CHECK(err.find("\"entries\"") != std::string::npos);
  CHECK(err.find("\"succ\"") != std::string::npos);

  RunResult stdout_only = run_cli("x1^2+1", "--form ndr --dump-chain");
  CHECK(stdout_only.out.find("entries") == std::string::npos);  // matrix only
}

TEST_CASE("DETREP_SEED env stands in for --seed") {
  const char* bin = std::getenv("DETREP_BIN");
  REQUIRE(bin != nullptr);
  auto run_env = [&](const std::string& env) {
    std::string cmd = "printf 'x1^5 - 2*x2' | " + env + " " + bin +
                      " --form rdr --verify eval --trials 3 2>&1 1>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string err;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) err.append(buf.data(), got);
    pclose(f);
    return err;
  };
  CHECK(run_env("DETREP_SEED=77").find("seed 77") != std::string::npos);
  CHECK(run_env("").find("seed 0") != std::string::npos);
}

TEST_CASE("json output round-trips and re-verifies") {
  std::string poly = "x1^3 - 2*x1*x2 + 7";
  RunResult r = run_cli(poly, "--form tdr --output json");
  REQUIRE(r.exit_code == 0);
  PencilMatrix m = pencil_from_json(r.out);
  auto parsed = parse_polynomial(poly);
  CHECK(eval_determinant_check(m, parsed.poly, 20, 0));
  CHECK(symbolic_determinant(m) == parsed.poly);
}

TEST_CASE("identical runs are byte-identical") {
  std::string flags = "--form rdr --output json --verify eval --trials 5 --seed 9";
  RunResult a = run_cli("x1^4 - 3*x2^2 + x1*x2", flags);
  RunResult b = run_cli("x1^4 - 3*x2^2 + x1*x2", flags);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("udr with symbolic coefficients") {
  RunResult r = run_cli("[a]*x1^2 + [b]*x1*x2 + [d]", "--form udr --output json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"UDR\"") != std::string::npos);
  CHECK(r.out.find("a") != std::string::npos);
}

TEST_CASE("latex output") {
  RunResult r = run_cli("x1^2 + 1", "--form ndr --output latex");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\\begin{bmatrix}") == 0);
}
