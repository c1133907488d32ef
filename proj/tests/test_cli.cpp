#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(POSITROID_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/positroid_cli_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("validate: valid, invalid, malformed") {
  std::string good = write_file("good.le", "**\n**\n*\n");
  RunResult ok = run_cli("validate --in " + good);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "valid; no loops; no coloops\n");

  std::string bad = write_file("bad.le", ".*\n*.\n");
  RunResult invalid = run_cli("validate --in " + bad);
  CHECK(invalid.exit_code == 1);
  CHECK(invalid.output.find("invalid (1 Le violation)") != std::string::npos);

  std::string malformed = write_file("malformed.le", "**\n***\n");
  CHECK(run_cli("validate --in " + malformed).exit_code == 2);
}

TEST_CASE("validate reports loops and coloops without failing") {
  std::string path = write_file("loopy.le", "*.\n.\n");
  RunResult r = run_cli("validate --in " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "valid; loops {2}; coloops {3}\n");
}

TEST_CASE("validate json output") {
  std::string good = write_file("good.le", "**\n**\n*\n");
  RunResult r = run_cli("validate --format json --in " + good);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["valid"] == true);
  CHECK(j["loops"].empty());
  CHECK(j["diagram"]["n"] == 5);
}

TEST_CASE("analyze the running example") {
  std::string good = write_file("good.le", "**\n**\n*\n");
  RunResult r = run_cli("analyze --in " + good);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("bases (9): 124 125 134 135 145 234 235 245 345") != std::string::npos);
  CHECK(r.output.find("h-vector (activity):    [1, 2, 3, 3]") != std::string::npos);
  CHECK(r.output.find("h-vector (f-transform): [1, 2, 3, 3]") != std::string::npos);
  CHECK(r.output.find("pure order ideal: yes") != std::string::npos);

  // byte determinism
  CHECK(run_cli("analyze --in " + good).output == r.output);
}

TEST_CASE("analyze json schema") {
  std::string good = write_file("good.le", "**\n**\n*\n");
  RunResult r = run_cli("analyze --format json --in " + good);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["n"] == 5);
  CHECK(j["b0"] == json::array({1, 2, 4}));
  CHECK(j["bases"].size() == 9);
  CHECK(j["h_activity"] == json::array({1, 2, 3, 3}));
  CHECK(j["h_from_f"] == json::array({1, 2, 3, 3}));
  CHECK(j["monomials"].size() == 9);
  CHECK(j["ideal"]["order_ideal"] == true);
  CHECK(j["ideal"]["pure"] == true);
  CHECK(j["ideal"]["o_sequence"] == json::array({1, 2, 3, 3}));
  CHECK(j["ideal"]["maximal"].size() == 3);
  CHECK(j["reduction"]["loops"].empty());
  CHECK(j["reduction"]["map"]["1"] == 1);
  // phi(235) = x3^2 * x5 as an exponent object
  bool found = false;
  for (const auto& entry : j["monomials"])
    if (entry["basis"] == json::array({2, 3, 5})) {
      CHECK(entry["monomial"]["3"] == 2);
      CHECK(entry["monomial"]["5"] == 1);
      CHECK(entry["degree"] == 3);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("analyze refuses loops without the flag and reduces with it") {
  std::string path = write_file("loopy.le", "*.\n.\n");
  CHECK(run_cli("analyze --in " + path).exit_code == 1);

  RunResult reduced = run_cli("analyze --auto-reduce --in " + path);
  CHECK(reduced.exit_code == 0);
  CHECK(reduced.output.find("reduced: removed loops {2}, coloops {3}") != std::string::npos);
  CHECK(reduced.output.find("h-vector (activity):    [1, 1]") != std::string::npos);
}

TEST_CASE("analyze with witnesses") {
  RunResult r = run_cli("analyze --show-witnesses --inline '**;**;*'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("witnesses:") != std::string::npos);
  CHECK(r.output.find("124: augment->125") != std::string::npos);
  CHECK(r.output.find("235: /x3->135 /x5->234 (maximal)") != std::string::npos);
}

TEST_CASE("hasse output is deterministic DOT") {
  std::string good = write_file("good.le", "**\n**\n*\n");
  RunResult r = run_cli("hasse --in " + good);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("digraph hasse") != std::string::npos);
  CHECK(r.output.find("m8 [label=") != std::string::npos);
  CHECK(run_cli("hasse --in " + good).output == r.output);

  std::string bad = write_file("bad.le", ".*\n*.\n");
  CHECK(run_cli("hasse --in " + bad).exit_code == 1);
}

TEST_CASE("sweep is clean and the mutant self-test trips it") {
  RunResult clean = run_cli("sweep --max-n 4");
  CHECK(clean.exit_code == 0);
  CHECK(clean.output.find("violations: 0") != std::string::npos);

  RunResult mutant = run_cli("sweep --max-n 4 --mutate phi-unfiltered");
  CHECK(mutant.exit_code == 1);
  CHECK(mutant.output.find("violations: 1") != std::string::npos);
  CHECK(mutant.output.find("counterexample:") != std::string::npos);

  // deterministic random suite
  RunResult a = run_cli("sweep --max-n 3 --samples 10 --seed 42");
  RunResult b = run_cli("sweep --max-n 3 --samples 10 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("analyze").exit_code == 2);                       // no input
  CHECK(run_cli("sweep --samples 5").exit_code == 2);             // seed required
  CHECK(run_cli("analyze --format yaml --inline '*'").exit_code == 2);
  CHECK(run_cli("hasse --format text --inline '*'").exit_code == 2);
  CHECK(run_cli("sweep --mutate bogus").exit_code == 2);
}

TEST_CASE("stdin input") {
  std::string command = "printf '*\\n' | " + std::string(POSITROID_CLI_PATH) + " validate --in -";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[256];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(output == "valid; no loops; no coloops\n");
}
