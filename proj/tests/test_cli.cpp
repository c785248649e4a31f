// Copyright 2026 The quotascan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the installed binary end to end. The test runner provides the
// binary path in QUOTASCAN_CLI.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout
};

const std::string& cli_path() {
  static const std::string path = [] {
    const char* env = std::getenv("QUOTASCAN_CLI");
    REQUIRE_MESSAGE(env != nullptr, "QUOTASCAN_CLI must point at the binary");
    return std::string(env);
  }();
  return path;
}

const fs::path& work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "quotascan_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const std::string stderr_file = (work_dir() / "stderr.txt").string();
  const std::string command = cli_path() + " " + args + " 2>" + stderr_file;
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path path = work_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

const char* kEconTable =
    "discipline,university,size,women\n"
    "econ,U1,6,0\n"
    "econ,U2,16,2\n"
    "econ,U3,12,2\n"
    "econ,U4,7,1\n"
    "econ,U5,23,5\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("test subcommand reports observed counts for the example table") {
  const auto input = write_file("econ.csv", kEconTable);
  const auto result = run("test --input " + input.string());
  REQUIRE(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  const auto& stratum_table = report.at("per_stratum_tables").at("tables").at(0);
  CHECK(stratum_table.at("scope") == "econ");
  CHECK(stratum_table.at("rows").at(2).at("observed") == 2);  // two 2-women depts
  CHECK(report.at("deviation_table").at("rows").size() == 11);
}

TEST_CASE("z-max zero leaves one row and a residual bucket") {
  const auto input = write_file("econ.csv", kEconTable);
  const auto result = run("test --z-max 0 --input " + input.string());
  REQUIRE(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  const auto& table = report.at("deviation_table");
  CHECK(table.at("rows").size() == 1);
  CHECK(table.at("rows").at(0).at("observed") == 1);
  CHECK(table.at("residual_count") == 4);
}

TEST_CASE("missing input exits 2 with a diagnostic on stderr") {
  const auto result = run("test --input /no/such/file.csv");
  CHECK(result.exit_code == 2);
  CHECK(result.output.empty());
  CHECK(read_file(work_dir() / "stderr.txt").find("cannot open") !=
        std::string::npos);
}

TEST_CASE("validation problems exit 1") {
  const auto input = write_file(
      "bad_roster.csv", "discipline,university,gender\necon,U1,X\n");
  const auto result = run("test --format roster --input " + input.string());
  CHECK(result.exit_code == 1);
  CHECK(read_file(work_dir() / "stderr.txt").find("gender") != std::string::npos);

  const auto small = write_file(
      "small.csv", "discipline,university,size,women\necon,U1,2,1\n");
  CHECK(run("test --input " + small.string()).exit_code == 1);
}

TEST_CASE("generated hard-quota corpora show the documented rejection pattern") {
  const auto corpus = (work_dir() / "hard.csv").string();
  const auto gen = run("generate --strata 20 --departments 20 20 "
                       "--size-range 5 30 --regime hard-quota --quota 2 "
                       "--seed 11 --out " + corpus);
  REQUIRE(gen.exit_code == 0);
  const auto result = run("test --input " + corpus);
  REQUIRE(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  const auto& rows = report.at("deviation_table").at("rows");
  CHECK(rows.at(2).at("deviation").get<double>() > 0.0);
  CHECK(rows.at(2).at("p_value").get<double>() < 0.01);
  CHECK(rows.at(0).at("deviation").get<double>() < 0.0);
}

TEST_CASE("environment variables override defaults") {
  const auto flag_run = run("generate --strata 2 --departments 3 3 --seed 5");
  REQUIRE(flag_run.exit_code == 0);

  RunResult env_run;
  const std::string command = "env QUOTASCAN_SEED=5 " + cli_path() +
                              " generate --strata 2 --departments 3 3 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    env_run.output.append(buffer.data(), n);
  env_run.exit_code = WEXITSTATUS(pclose(pipe));

  CHECK(env_run.exit_code == 0);
  CHECK(env_run.output == flag_run.output);
}

TEST_CASE("reports are byte-identical across runs; bootstrap draws export") {
  const auto corpus = (work_dir() / "null.csv").string();
  REQUIRE(run("generate --strata 6 --departments 5 9 --size-range 4 15 "
              "--seed 3 --out " + corpus).exit_code == 0);
  const auto draws_path = (work_dir() / "draws.csv").string();
  const std::string args = "report --draws 200 --seed 9 --input " + corpus +
                           " --export-draws " + draws_path;
  const auto first = run(args);
  REQUIRE(first.exit_code == 0);
  const auto second = run(args);
  CHECK(first.output == second.output);

  const auto draws = read_file(draws_path);
  CHECK(draws.rfind("z,replication,deviation\n", 0) == 0);

  const auto report = nlohmann::json::parse(first.output);
  for (const char* key : {"deviation_table", "bootstrap", "diagnostics",
                          "quota_scenario"})
    CHECK(report.contains(key));
}

TEST_CASE("csv output format is a flat projection") {
  const auto input = write_file("econ.csv", kEconTable);
  const auto result = run("test --output-format csv --input " + input.string());
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.rfind("scope,z,observed,", 0) == 0);
  CHECK(result.output.find("econ,2,2,") != std::string::npos);
}

TEST_CASE("simulate-quota emits counterfactual shares") {
  const auto input = write_file("econ.csv", kEconTable);
  const auto result = run("simulate-quota --quota 2 --input " + input.string());
  REQUIRE(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  const auto& scenario = report.at("quota_scenario");
  CHECK(scenario.at("strata").at(0).at("department_counts") ==
        nlohmann::json::array({2, 2, 2, 2, 2}));
}

}  // TEST_SUITE
