// Copyright 2026 The ldpfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldpfair/cli.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace ldpfair;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("scenarios list names all eleven tables") {
  CliRun r = cli({"scenarios", "list"});
  CHECK(r.code == 0);
  for (const char* name : {"S1", "S2", "S3", "S4", "S5", "S6", "S7", "compas",
                           "adult", "german", "lsac"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
  CliRun j = cli({"scenarios", "list", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.size() == 11);
}

TEST_CASE("analyze S1 at eps 0.5 reports zero primed disparity") {
  CliRun r = cli({"analyze", "--scenario", "S1", "--eps", "0.5", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["metrics"]["sd_prime"][0]["exact"] == "0");
  CHECK(doc["metrics"]["sd"]["exact"] == "1/2");
  CHECK(doc["metrics"]["accuracy_prime"][0]["exact"] == "17/20");
  CHECK(doc["verdict"][0]["regime"] == "eliminated");
}

TEST_CASE("analyze honors per-group series") {
  CliRun r = cli({"analyze", "--scenario", "S1", "--eps", "0.5", "--per-group",
                  "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("acceptance_rate,0") != std::string::npos);
  CHECK(r.out.find("tpr,1") != std::string::npos);
}

TEST_CASE("assumptions german: violated witnesses and exit code 3") {
  CliRun r = cli({"assumptions", "--scenario", "german"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["assumptions"]["uniform_discrimination"]["status"] == "violated");
  CHECK(doc["assumptions"]["uniform_discrimination"]
           ["witness_gamma1_gt_gamma0"] == "1");
  CHECK(doc["assumptions"]["uniform_discrimination"]
           ["witness_gamma1_lt_gamma0"] == "0");

  CliRun strict = cli({"assumptions", "--scenario", "german",
                       "--require-assumptions"});
  CHECK(strict.code == 3);
}

TEST_CASE("thresholds S1 reports the group-0 flip at ln(7/3)") {
  CliRun r = cli({"thresholds", "--scenario", "S1"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["thresholds"][0]["flip_group"] == 0);
  CHECK(doc["thresholds"][0]["x"] == "0");
  double eps_star = doc["thresholds"][0]["eps_star"].get<double>();
  CHECK(eps_star == doctest::Approx(0.8472978603872034).epsilon(1e-9));
}

TEST_CASE("exit codes: unknown scenario 2, bad arguments 1") {
  CHECK(cli({"analyze", "--scenario", "S99"}).code == 2);
  CHECK(cli({"analyze"}).code == 1);  // no source
  CHECK(cli({"analyze", "--scenario", "S1", "--eps", "abc"}).code == 1);
  CHECK(cli({"analyze", "--scenario", "S1", "--format", "yaml"}).code == 1);
  CHECK(cli({"bogus-subcommand"}).code == 1);
  CHECK(cli({"analyze", "--scenario", "S1", "--out",
             "/nonexistent-dir/x.json"}).code == 1);
}

TEST_CASE("dist documents come from files") {
  const char* path = "/tmp/ldpfair_cli_dist.json";
  {
    std::ofstream f(path);
    f << render_distribution(builtin_scenario("S4").dist);
  }
  CliRun r = cli({"analyze", "--dist", path, "--eps", "0.1", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["metrics"]["sd"]["exact"] == "13/50");
  CHECK(doc["verdict"][0]["regime"] == "unchanged");
}

TEST_CASE("sweep emits log-spaced grids in CSV") {
  CliRun r = cli({"sweep", "--scenario", "S1", "--eps-min", "0.1", "--eps-max",
                  "10", "--points", "5", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == std::string(kSweepCsvHeader));
  size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  // 5 eps x (sd + 2 csd + eod + accuracy) rows
  CHECK(rows == 5 * 5);
}

TEST_CASE("simulate is seed-deterministic end to end") {
  std::vector<std::string> args{"simulate", "--scenario", "S1",
                                "--eps",    "0.5",        "--n",
                                "2000",     "--runs",     "3",
                                "--seed",   "9",          "--format",
                                "json"};
  CliRun a = cli(args);
  CliRun b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  std::vector<std::string> serial_args = args;
  serial_args.push_back("--serial");
  CliRun c = cli(serial_args);
  CHECK(c.out == a.out);
}

TEST_CASE("simulate runs from a distribution document path") {
  const char* path = "/tmp/ldpfair_cli_sim_dist.json";
  {
    std::ofstream f(path);
    f << render_distribution(builtin_scenario("S1").dist);
  }
  CliRun r = cli({"simulate", "--dist", path, "--eps", "8", "--n", "1500",
                  "--runs", "2", "--seed", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["scenario"] == path);
  CHECK(doc["analytic"]["baseline"]["sd"]["exact"] == "1/2");

  // log-spaced grid flags apply to simulate as well
  CliRun lg = cli({"simulate", "--scenario", "S1", "--eps-min", "1",
                   "--eps-max", "4", "--points", "3", "--n", "800", "--runs",
                   "1", "--format", "json"});
  REQUIRE(lg.code == 0);
  auto doc2 = nlohmann::json::parse(lg.out);
  CHECK(doc2["epsilon"].size() == 3);
  CHECK(doc2["epsilon"][1].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("simulate accepts a config document with flag overrides") {
  const char* path = "/tmp/ldpfair_cli_config.json";
  {
    std::ofstream f(path);
    f << R"({"scenario": "S1", "eps_grid": [0.5], "n": 1000, "runs": 2,
             "seed": 3, "train_fraction": 0.8})";
  }
  CliRun r = cli({"simulate", "--config", path, "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 1000);
  CHECK(doc["runs"] == 2);

  CliRun overridden = cli({"simulate", "--config", path, "--runs", "4",
                           "--format", "json"});
  auto doc2 = nlohmann::json::parse(overridden.out);
  CHECK(doc2["runs"] == 4);
}

TEST_CASE("verify smoke run passes on a small draw count") {
  CliRun r = cli({"verify", "--n", "25", "--seed", "99"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verification passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("numeric boundary epsilon prints a warning on stderr") {
  CliRun r = cli({"analyze", "--scenario", "S1", "--eps",
                  "0.8472978603872034", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(r.err.find("flip threshold") != std::string::npos);
}
