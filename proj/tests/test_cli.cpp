// End-to-end checks of the command-line binary. The test runner passes the
// binary location in the ATYPE_CLI environment variable.

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("ATYPE_CLI");
  REQUIRE_MESSAGE(env != nullptr, "ATYPE_CLI must point at the binary");
  return env;
}

std::string data_dir() {
  const char* env = std::getenv("ATYPE_DATA");
  REQUIRE_MESSAGE(env != nullptr, "ATYPE_DATA must point at the data directory");
  return env;
}

CliResult run_cli(const std::string& args) {
  const std::string out_file = "cli_test_stdout.tmp";
  const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2> cli_test_stderr.tmp";
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.out = buf.str();
  return result;
}

}  // namespace

TEST_CASE("validate accepts the shipped networks") {
  const CliResult r = run_cli("validate " + data_dir() + "/networks/and2.atype");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "valid\n");
}

TEST_CASE("validate rejects a broken file with exit 1") {
  {
    std::ofstream bad("cli_bad.atype", std::ios::binary);
    bad << "ATYPE 1\nNODES 1\n0 INPUT\nARROWS 0\nINPUT_ORDER 0\nOUTPUT_ORDER 0\nDELAY 0\n";
  }
  const CliResult r = run_cli("validate cli_bad.atype");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("line") != std::string::npos);
  std::remove("cli_bad.atype");
}

TEST_CASE("run drives the demo network") {
  const std::string net = data_dir() + "/networks/seq_demo.atype";
  CliResult r = run_cli("run " + net + " --input \"11;01;10\" --out-len 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1;1;0\n");

  // the same vectors written right-to-left in time
  r = run_cli("run " + net + " --input \"10;01;11\" --out-len 3 --paper-order");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0;1;1\n");
}

TEST_CASE("missing files exit 1, bad flags exit 2") {
  CHECK(run_cli("run no_such_file.atype --input 1 --out-len 1").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("run").exit_code == 2);
  CHECK(run_cli("search --task identity").exit_code == 2);
}

TEST_CASE("search emits one record line and a solution file") {
  const CliResult r = run_cli(
      "search --task identity --n 1 --algo genetic --seed 7 --max-attempts 100000 "
      "--solution cli_solution.atype");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("identity,1,genetic,0,7,", 0) == 0);
  CHECK(r.out.find(",1,") != std::string::npos);  // solved flag
  const CliResult v = run_cli("validate cli_solution.atype");
  CHECK(v.exit_code == 0);
  std::remove("cli_solution.atype");
}

TEST_CASE("an unsolved search exits 3") {
  const CliResult r = run_cli(
      "search --task identity --n 3 --algo blind --seed 7 --max-attempts 50");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find(",0,,,") != std::string::npos);
}

TEST_CASE("claims subcommand prints a summary") {
  const CliResult r = run_cli(
      "claims --which odd_delay_identity --attempts 50 --seed 3 --test-len 500");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("claim=odd_delay_identity attempts=50", 0) == 0);
}

TEST_CASE("stats aggregates a records file") {
  {
    std::ofstream csv("cli_stats.csv", std::ios::binary);
    csv << "task,n,algorithm,trial,seed,attempts,solved,solution_size,solution_delay,wall_ms\n";
    csv << "identity,1,genetic,0,1,100,1,4,2,0\n";
    csv << "identity,1,genetic,1,2,200,1,4,2,0\n";
    csv << "identity,1,genetic,2,3,300,1,4,2,0\n";
  }
  const CliResult r = run_cli("stats --in cli_stats.csv --confidence 0.90");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("task,n,algorithm,trials,mean_attempts,half_width\n") == 0);
  CHECK(r.out.find("identity,1,genetic,3,200,") != std::string::npos);
  std::remove("cli_stats.csv");
}

TEST_CASE("experiment runs from a config file and is reproducible") {
  {
    std::ofstream cfg("cli_experiment.ini", std::ios::binary);
    cfg << "[experiment]\nseed = 5\ntrials = 2\nout = cli_experiment.csv\n"
        << "[task.identity]\nn = 1\nmax_attempts = 100000\n"
        << "[algo.genetic]\n";
  }
  CHECK(run_cli("experiment --config cli_experiment.ini").exit_code == 0);
  std::ifstream in("cli_experiment.csv", std::ios::binary);
  std::ostringstream first;
  first << in.rdbuf();
  CHECK(run_cli("experiment --config cli_experiment.ini").exit_code == 0);
  std::ifstream in2("cli_experiment.csv", std::ios::binary);
  std::ostringstream second;
  second << in2.rdbuf();
  CHECK(first.str() == second.str());
  CHECK(first.str().rfind("task,n,algorithm,", 0) == 0);
  std::remove("cli_experiment.csv");
  std::remove("cli_experiment.ini");
}
