#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string path = "/tmp/galrep_cli_out.txt";
  const std::string cmd = std::string(GALREP_CLI_PATH) + " " + args + " > " + path + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify: trivial orbit and the Z1 family") {
  const RunResult z4 = run_cli("classify --dim 2 --tau 0 --S 0 --p0 5 --p 0,0");
  CHECK(z4.exit_code == 0);
  CHECK(contains(z4.out, "Z4"));
  CHECK(contains(z4.out, "trivial orbit"));
  CHECK(contains(z4.out, "m_F-representations of G"));

  const RunResult z1 = run_cli("classify --dim 2 --tau 1 --S 0 --p0 0 --p 1,1");
  CHECK(z1.exit_code == 0);
  CHECK(contains(z1.out, "Z1"));
  CHECK(contains(z1.out, "rho = 2"));
  CHECK(contains(z1.out, "s in R"));

  const RunResult z2 = run_cli("classify --dim 2 --tau 1 --S 1 --p0 0.3 --p 0.2,-1");
  CHECK(z2.exit_code == 0);
  CHECK(contains(z2.out, "Z2"));
}

TEST_CASE("classify: 1+3 and its tau gate") {
  const RunResult ok = run_cli("classify --dim 3 --tau 1 --p0 0 --p 1,0,1");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "Z_rho"));
  CHECK(contains(ok.out, "SU(2)"));
  CHECK(contains(ok.out, "s in N/2"));

  const RunResult bad = run_cli("classify --dim 3 --tau 0 --p0 0 --p 0,0,0");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "tau != 0"));

  const RunResult badp = run_cli("classify --dim 3 --tau 1 --p0 0 --p 1,0");
  CHECK(badp.exit_code == 2);
}

TEST_CASE("verify: pass, fail, and invalid-config exit codes") {
  const RunResult ok = run_cli("verify --case G3 --s 0.5 --tau 1 --seed 42 --pairs 60 --points 20");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "PASS"));

  const RunResult c2 = run_cli(
      "verify --case C2ii --F 1 --S 1 --r 6.283185307179586 --lambda 0.25 --seed 7 --pairs 60 "
      "--points 20");
  CHECK(c2.exit_code == 0);

  const RunResult floor = run_cli("verify --case G3 --tol 1e-20 --pairs 40 --points 10");
  CHECK(floor.exit_code == 1);
  CHECK(contains(floor.out, "FAIL"));

  const RunResult gate = run_cli("verify --case B2 --tau 0 --S 1");
  CHECK(gate.exit_code == 2);
  CHECK(contains(gate.out, "tau != 0"));

  const RunResult unknown = run_cli("verify --case Q9");
  CHECK(unknown.exit_code == 2);

  const RunResult badcfg = run_cli("verify --case G3 --pairs 0");
  CHECK(badcfg.exit_code == 2);

  const RunResult badtol = run_cli("verify --case G3 --tol -1");
  CHECK(badtol.exit_code == 2);
}

TEST_CASE("verify: legacy phases are a documented failure") {
  const RunResult r = run_cli("--verbatim-phases verify --case A2 --pairs 60 --points 20");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "rep_law"));
  CHECK(contains(r.out, "FAIL"));
}

TEST_CASE("report: filters, determinism, schema") {
  const RunResult empty = run_cli("report --json");
  CHECK(empty.exit_code == 0);
  CHECK(contains(empty.out, "\"cases\": []"));

  const RunResult single =
      run_cli("report --case A2 --seed 9 --pairs 40 --points 10 --json");
  CHECK(single.exit_code == 0);
  CHECK(contains(single.out, "\"name\": \"A2\""));
  CHECK(contains(single.out, "\"version\": \"1\""));
  CHECK(contains(single.out, "\"residual\""));
  CHECK(contains(single.out, "\"tol\""));

  const RunResult again =
      run_cli("report --case A2 --seed 9 --pairs 40 --points 10 --json");
  CHECK(single.out == again.out);  // byte-identical under a fixed seed

  const RunResult unknown = run_cli("report --case NOPE --json");
  CHECK(unknown.exit_code == 2);
}
