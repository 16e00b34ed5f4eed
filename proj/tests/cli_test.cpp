// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "rmop/cli.hpp"
#include "rmop/rmop.hpp"

namespace rmop {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult RunTool(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli::RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("rmop_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // A small generated scenario the exact solver can handle.
  std::string SmallScenario(const std::string& name = "s.json") {
    const RunResult r = RunTool({"gen", "--vertices", "12", "--robots", "3", "--alpha", "1",
                             "--budget", "25", "--seed", "4", "--out", Path(name)});
    EXPECT_EQ(r.code, 0) << r.err;
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesLoadableScenario) {
  const RunResult r = RunTool({"gen", "--vertices", "96", "--robots", "10", "--alpha", "3",
                           "--budget", "60", "--seed", "7", "--out", Path("s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Scenario s = LoadScenario(ReadFile(Path("s.json")));
  EXPECT_EQ(s.graph.size(), 96u);
  EXPECT_EQ(s.robots(), 10u);
  EXPECT_EQ(s.alpha, 3u);
  EXPECT_EQ(s.budget, 60.0);
}

TEST_F(CliTest, GenIsDeterministic) {
  SmallScenario("a.json");
  SmallScenario("b.json");
  EXPECT_EQ(ReadFile(Path("a.json")), ReadFile(Path("b.json")));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(RunTool({"gen", "--vertices", "10"}).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({}).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({"gen", "--vertices", "many", "--out", Path("x.json")}).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, GenRejectsAlphaEqualToRobots) {
  const RunResult r =
      RunTool({"gen", "--robots", "10", "--alpha", "10", "--out", Path("s.json")});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("alpha must be < N"), std::string::npos);
}

TEST_F(CliTest, SolveRmopAndSgaShapes) {
  const std::string s = SmallScenario();
  ASSERT_EQ(RunTool({"solve", "--scenario", s, "--planner", "rmop", "--subroutine", "gcb",
                 "--out", Path("r.json")})
                .code,
            0);
  const SolutionDocument rmop =
      SolutionDocumentFromJson(Json::parse(ReadFile(Path("r.json"))));
  EXPECT_EQ(rmop.solution.s1_robots.size(), 1u);
  EXPECT_EQ(rmop.solver.method, OpMethod::kGcb);
  ASSERT_TRUE(rmop.bounds.has_value());
  EXPECT_FALSE(rmop.bounds->eta_note.empty());

  ASSERT_EQ(RunTool({"solve", "--scenario", s, "--planner", "sga", "--subroutine", "exact",
                 "--out", Path("g.json")})
                .code,
            0);
  const SolutionDocument sga = SolutionDocumentFromJson(Json::parse(ReadFile(Path("g.json"))));
  EXPECT_TRUE(sga.solution.s1_robots.empty());
  EXPECT_EQ(sga.solution.s2_robots, (std::vector<RobotId>{0, 1, 2}));
}

TEST_F(CliTest, SolveToStdout) {
  const std::string s = SmallScenario();
  const RunResult r = RunTool({"solve", "--scenario", s, "--planner", "ng", "--out", "-"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["planner"], "ng");
}

TEST_F(CliTest, ExactSolverGuardOnLargeScenario) {
  RunTool({"gen", "--vertices", "96", "--robots", "10", "--alpha", "3", "--budget", "60",
       "--seed", "7", "--out", Path("big.json")});
  const RunResult r = RunTool({"solve", "--scenario", Path("big.json"), "--subroutine", "exact",
                           "--out", Path("r.json")});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("guard"), std::string::npos);
  EXPECT_NE(r.err.find("gcb"), std::string::npos);
}

TEST_F(CliTest, AttackWorstRandomAndDigest) {
  const std::string s = SmallScenario();
  ASSERT_EQ(RunTool({"solve", "--scenario", s, "--out", Path("r.json")}).code, 0);
  const RunResult worst = RunTool({"attack", Path("r.json"), "--scenario", s, "--model", "worst",
                               "--size", "2"});
  ASSERT_EQ(worst.code, 0) << worst.err;
  const Json w = Json::parse(worst.out);
  EXPECT_EQ(w["removed"].size(), 2u);
  EXPECT_LE(w["residual"].get<double>(), w["f_S"].get<double>() + 1e-9);

  const auto random = [&] {
    return RunTool({"attack", Path("r.json"), "--scenario", s, "--model", "random", "--size", "2",
                "--seed", "1"});
  };
  EXPECT_EQ(random().out, random().out);
  EXPECT_EQ(Json::parse(random().out)["seed"], 1);

  const RunResult by_default = RunTool({"attack", Path("r.json"), "--scenario", s});
  EXPECT_EQ(Json::parse(by_default.out)["size"], 1);

  const RunResult partial = RunTool({"attack", Path("r.json"), "--scenario", s, "--model",
                                 "partial", "--size", "2"});
  EXPECT_EQ(partial.code, cli::kExitFailure);

  const std::string other = Path("other.json");
  RunTool({"gen", "--vertices", "12", "--robots", "3", "--alpha", "1", "--budget", "25", "--seed",
       "5", "--out", other});
  const RunResult mismatch = RunTool({"attack", Path("r.json"), "--scenario", other});
  EXPECT_EQ(mismatch.code, cli::kExitFailure);
  EXPECT_NE(mismatch.err.find("digest"), std::string::npos);
}

TEST_F(CliTest, AttackGuard) {
  RunTool({"gen", "--vertices", "30", "--robots", "10", "--alpha", "5", "--budget", "20", "--seed",
       "1", "--out", Path("s.json")});
  ASSERT_EQ(RunTool({"solve", "--scenario", Path("s.json"), "--out", Path("r.json")}).code, 0);
  const RunResult r = RunTool({"attack", Path("r.json"), "--scenario", Path("s.json"), "--guard",
                           "100"});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("guard"), std::string::npos);
}

TEST_F(CliTest, VerifyCleanTamperedAndNonMetric) {
  const std::string s = SmallScenario();
  ASSERT_EQ(RunTool({"solve", "--scenario", s, "--out", Path("r.json")}).code, 0);
  RunResult r = RunTool({"verify", "--scenario", s, "--solution", Path("r.json"), "--json",
                     Path("v.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Json::parse(ReadFile(Path("v.json")))["clean"].get<bool>());

  Json doc = Json::parse(ReadFile(Path("r.json")));
  auto& first = doc["paths"][0]["vertices"];
  first.push_back(first[0]);
  WriteFile(Path("bad.json"), doc.dump(2));
  r = RunTool({"verify", "--scenario", s, "--solution", Path("bad.json")});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.out.find("[path]"), std::string::npos);

  doc = Json::parse(ReadFile(Path("r.json")));
  doc["team_reward"] = 1e6;
  WriteFile(Path("bad2.json"), doc.dump(2));
  r = RunTool({"verify", "--scenario", s, "--solution", Path("bad2.json")});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.out.find("[team_reward]"), std::string::npos);

  WriteFile(Path("nm.json"), R"({"vertices": [{"id":0,"x":0,"y":0,"reward":1},
      {"id":1,"x":1,"y":0,"reward":1}, {"id":2,"x":2,"y":0,"reward":1}],
      "distance_matrix": [[0,1,10],[1,0,1],[10,1,0]],
      "starts":[0],"budget":1,"alpha":0,"reward_kind":"modular"})");
  r = RunTool({"verify", "--scenario", Path("nm.json"), "--json", Path("nm_report.json")});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.out.find("[triangle]"), std::string::npos);
  const Json report = Json::parse(ReadFile(Path("nm_report.json")));
  EXPECT_EQ(report["metric"][0]["indices"], Json::array({0, 1, 2}));
}

TEST_F(CliTest, MissingFileIsFailure) {
  const RunResult r = RunTool({"verify", "--scenario", Path("nope.json")});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("io"), std::string::npos);
}

TEST_F(CliTest, BenchWritesCsvAndSummary) {
  WriteFile(Path("spec.json"), R"({
    "scenario": {"vertices": 25, "robots": 4, "alpha": 1, "budget": 30, "seed": 3},
    "planners": ["rmop", "sga"], "alphas": [1, 2],
    "attacks": [{"model": "worst"}], "trials": 3, "seed": 9, "timing": false})");
  ASSERT_EQ(RunTool({"bench", "--spec", Path("spec.json"), "--csv", Path("a.csv"), "--summary",
                 Path("sum.json")})
                .code,
            0);
  ASSERT_EQ(RunTool({"bench", "--spec", Path("spec.json"), "--csv", Path("b.csv")}).code, 0);
  const std::string csv = ReadFile(Path("a.csv"));
  EXPECT_EQ(csv, ReadFile(Path("b.csv")));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 3 * 2 * 2);
  const Json sum = Json::parse(ReadFile(Path("sum.json")));
  EXPECT_EQ(sum["groups"].size(), 4u);

  WriteFile(Path("zero.json"), R"({"scenario": {"vertices": 9, "robots": 2, "alpha": 1},
    "planners": ["rmop"], "attacks": [{"model": "worst"}], "trials": 0, "seed": 1})");
  ASSERT_EQ(RunTool({"bench", "--spec", Path("zero.json"), "--csv", Path("z.csv")}).code, 0);
  EXPECT_EQ(ReadFile(Path("z.csv")), std::string(kCsvHeader) + "\r\n");

  WriteFile(Path("bad.json"), R"({"scenario": {"vertices": 9, "robots": 2, "alpha": 1},
    "planners": ["dijkstra"], "attacks": [], "trials": 1, "seed": 1})");
  EXPECT_EQ(RunTool({"bench", "--spec", Path("bad.json"), "--csv", Path("x.csv")}).code,
            cli::kExitFailure);
}

TEST_F(CliTest, BenchScenarioFileRelativeToSpec) {
  SmallScenario("base.json");
  WriteFile(Path("spec.json"), R"({"scenario_file": "base.json", "planners": ["ng"],
    "subroutine": "exact", "attacks": [{"model": "greedy"}], "trials": 2, "seed": 1})");
  ASSERT_EQ(RunTool({"bench", "--spec", Path("spec.json"), "--csv", Path("a.csv")}).code, 0);
}

TEST_F(CliTest, DocumentsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::string name = "s" + std::to_string(seed) + ".json";
    const std::string kind = seed % 2 == 0 ? "modular" : "coverage";
    ASSERT_EQ(RunTool({"gen", "--vertices", std::to_string(9 + seed), "--robots", "3", "--alpha",
                   "1", "--budget", "30", "--reward-kind", kind, "--layout",
                   seed % 3 == 0 ? "uniform-random" : "grid", "--seed", std::to_string(seed),
                   "--out", Path(name)})
                  .code,
              0);
    const std::string text = ReadFile(Path(name));
    EXPECT_EQ(SerializeScenario(LoadScenario(text)), text);

    ASSERT_EQ(RunTool({"solve", "--scenario", Path(name), "--out", Path("r.json")}).code, 0);
    const std::string sol_text = ReadFile(Path("r.json"));
    const SolutionDocument doc = SolutionDocumentFromJson(Json::parse(sol_text));
    EXPECT_EQ(SolutionDocumentToJson(doc).dump(2) + "\n", sol_text);
    EXPECT_EQ(RunTool({"verify", "--scenario", Path(name), "--solution", Path("r.json")}).code, 0);
  }
}

}  // namespace
}  // namespace rmop
