#include <doctest/doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "gkmhess/gkm.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

std::string temp_path(const std::string& name) {
  const char* base = std::getenv("TMPDIR");
  return std::string(base ? base : "/tmp") + "/gkmhess_cli_" + std::to_string(getpid()) +
         "_" + name;
}

CliResult run_cli(const std::string& args, const std::string& tag) {
  const std::string outfile = temp_path(tag + ".out");
  const std::string command =
      std::string(GKMHESS_CLI_PATH) + " " + args + " > " + outfile + " 2>&1";
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(outfile);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::remove(outfile.c_str());
  return result;
}

}  // namespace

TEST_CASE("conditions reports stability per index") {
  const CliResult r = run_cli("conditions 2,3,3 --format json", "conditions");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["h"] == "[2,3,3]");
  REQUIRE(j["indices"].size() == 2);
  CHECK(j["indices"][0]["status"] == "almost-stable");
  CHECK(j["indices"][0]["witness"] == "(2,3)");
  CHECK(j["indices"][0]["multiplier"] == json::array({3, 2}));
  CHECK(j["indices"][1]["status"] == "almost-stable");
  CHECK(j["indices"][1]["witness"] == "(1,2)");
  const CliResult empty = run_cli("conditions 1,2,3 --format json", "conditions-empty");
  REQUIRE(empty.exit_code == 0);
  CHECK(json::parse(empty.output)["conditions"].empty());
}

TEST_CASE("malformed hessenberg input is a usage error") {
  CHECK(run_cli("conditions 2,1,3", "bad-h").exit_code == 2);
  CHECK(run_cli("conditions 3,3", "short-h").exit_code == 2);
  CHECK(run_cli("verify --suite no-such-suite", "bad-suite").exit_code == 2);
  CHECK(run_cli("schubert 0", "bad-rank").exit_code == 2);
}

TEST_CASE("decompose splits the unit element trivially") {
  const std::string file = temp_path("one.json");
  {
    std::ofstream out(file);
    out << gkmhess::to_json(gkmhess::GkmElement::unit(3));
  }
  const CliResult r =
      run_cli("decompose 2,3,3 1 --element " + file + " --format json", "decompose");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["kind"] == "almost-stable");
  CHECK(j["multiplier"] == json::array({3, 2}));
  CHECK(j["reconstructs"] == true);
  for (const auto& [vertex, value] : j["p"]["values"].items()) {
    (void)vertex;
    CHECK(value == "1");
  }
  for (const auto& [vertex, value] : j["m"]["values"].items()) {
    (void)vertex;
    CHECK(value == "0");
  }
  std::remove(file.c_str());
}

TEST_CASE("decompose rejects elements outside the subring") {
  // Nonzero only at the identity: violates every adjacent condition.
  const std::string file = temp_path("bad.json");
  {
    gkmhess::GkmElement f(3);
    f.set(gkmhess::Permutation::identity(3),
          gkmhess::Polynomial::constant(gkmhess::t_vars(3), 1));
    std::ofstream out(file);
    out << gkmhess::to_json(f);
  }
  CHECK(run_cli("decompose 2,3,3 1 --element " + file, "decompose-bad").exit_code == 2);
  CHECK(run_cli("decompose 2,3,3 9 --element " + file, "decompose-badi").exit_code == 2);
  std::remove(file.c_str());
  CHECK(run_cli("decompose 2,3,3 1 --element " + file, "decompose-gone").exit_code == 2);
}

TEST_CASE("verify emits byte-identical json for a fixed seed") {
  const std::string args = "verify --suite graded-modular --n 3 --seed 7 --format json";
  const CliResult a = run_cli(args, "det-a");
  const CliResult b = run_cli(args, "det-b");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json j = json::parse(a.output);
  CHECK(j["status"] == "pass");
  CHECK(j["failed"] == 0);
}

TEST_CASE("thread fan-out does not change the report") {
  const std::string args = "verify --suite stability --n 3 --samples 5 --format json";
  // Run through env to pin the thread cap on each side.
  const std::string outfile1 = temp_path("th1.out");
  const std::string outfile4 = temp_path("th4.out");
  const int s1 = std::system(("GKM_HESS_THREADS=1 " + std::string(GKMHESS_CLI_PATH) + " " +
                              args + " > " + outfile1)
                                 .c_str());
  const int s4 = std::system(("GKM_HESS_THREADS=4 " + std::string(GKMHESS_CLI_PATH) + " " +
                              args + " > " + outfile4)
                                 .c_str());
  REQUIRE(WIFEXITED(s1));
  REQUIRE(WEXITSTATUS(s1) == 0);
  REQUIRE(WIFEXITED(s4));
  REQUIRE(WEXITSTATUS(s4) == 0);
  std::ifstream in1(outfile1), in4(outfile4);
  std::stringstream b1, b4;
  b1 << in1.rdbuf();
  b4 << in4.rdbuf();
  CHECK(b1.str() == b4.str());
  CHECK(!b1.str().empty());
  std::remove(outfile1.c_str());
  std::remove(outfile4.c_str());
}

TEST_CASE("schubert table output") {
  const CliResult r = run_cli("schubert 3 --format json", "schubert");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["entries"].size() == 6);
  CHECK(j["entries"]["[3,2,1]"] == "x1^2*x2");
  const CliResult d = run_cli("schubert 2 --double --format json", "schubert-double");
  REQUIRE(d.exit_code == 0);
  CHECK(json::parse(d.output)["entries"]["[2,1]"] == "-t1 + x1");
}

TEST_CASE("poincare and csf output") {
  const CliResult p = run_cli("poincare 2,3,3 --format json", "poincare");
  REQUIRE(p.exit_code == 0);
  const json jp = json::parse(p.output);
  CHECK(jp["poincare"] == "1 + 4*q + q^2");
  CHECK(jp["coefficients"] == json::array({1, 4, 1}));

  const CliResult c = run_cli("csf 2,2 --vars 2 --format json", "csf");
  REQUIRE(c.exit_code == 0);
  CHECK(json::parse(c.output)["csf"] == "x1*x2*q + x1*x2");
}

TEST_CASE("basis dump lists elements in construction order") {
  const CliResult r = run_cli("basis 2,3,3 --format json", "basis");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  REQUIRE(j["elements"].size() == 6);
  CHECK(j["elements"][0]["w"] == "[1,2,3]");
  CHECK(j["elements"][0]["degree"] == 0);
  CHECK(j["elements"][5]["degree"] == 2);
  CHECK(j["elements"][5]["w"] == "[3,2,1]");
}
