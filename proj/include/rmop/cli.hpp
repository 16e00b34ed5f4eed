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

// Command-line front end: gen, solve, attack, bench, verify.
//
// Exit codes: 0 success, 1 validation or verification failure (including
// any library error), 2 usage error.

#ifndef RMOP_CLI_HPP_
#define RMOP_CLI_HPP_

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rmop/bench.hpp"
#include "rmop/documents.hpp"
#include "rmop/scenario_io.hpp"

namespace rmop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline Layout ParseLayout(const std::string& s) {
  if (s == "grid") return Layout::kGrid;
  if (s == "uniform-random" || s == "uniform") return Layout::kUniformRandom;
  Fail(ErrorKind::kInvalidArgument, "unknown layout '", s, "' (expected grid|uniform-random)");
}

inline void Emit(std::ostream& out, const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    out << bytes;
  } else {
    WriteFile(path, bytes);
  }
}

inline void PrintReport(std::ostream& out, const char* title, const ValidationReport& r) {
  out << title << ": " << (r.clean() ? "ok" : "FAILED") << "\n";
  for (const Issue& i : r.issues) out << "  [" << i.kind << "] " << i.message << "\n";
}

}  // namespace detail

struct GenArgs {
  GenerationParams params;
  std::string layout = "grid";
  std::string reward_kind = "modular";
  std::string out;
};

struct SolveArgs {
  std::string scenario;
  std::string planner = "rmop";
  std::string subroutine = "gcb";
  std::string out;
  bool mask_s1 = false;
};

struct AttackArgs {
  std::string solution;
  std::string scenario;
  std::string model = "worst";
  std::optional<std::size_t> size;
  std::optional<std::size_t> planned_alpha;
  std::uint64_t seed = 0;
  std::uint64_t guard = kDefaultEnumerationGuard;
  std::string out;
};

struct BenchArgs {
  std::string spec;
  std::string csv;
  std::string summary;
};

struct VerifyArgs {
  std::string scenario;
  std::string solution;
  std::string json;
};

inline int CmdGen(const GenArgs& a, std::ostream& out) {
  GenerationParams p = a.params;
  p.layout = detail::ParseLayout(a.layout);
  p.reward_kind = ParseRewardKind(a.reward_kind);
  const Scenario s = GenerateScenario(p);
  WriteFile(a.out, SerializeScenario(s));
  out << "wrote " << a.out << " (" << s.graph.size() << " vertices, " << s.robots()
      << " robots, alpha " << s.alpha << ", budget " << s.budget << ")\n";
  return kExitOk;
}

inline int CmdSolve(const SolveArgs& a, std::ostream& out) {
  const Scenario scenario = LoadScenario(ReadFile(a.scenario));
  const PlannerKind planner = ParsePlanner(a.planner);
  const OpSolverConfig solver = OpSolverConfig::For(ParseOpMethod(a.subroutine));
  RmopOptions options;
  options.mask_s1 = a.mask_s1;

  SolutionDocument doc;
  doc.scenario_digest = ScenarioDigest(scenario);
  doc.planner = planner;
  doc.solver = solver;
  doc.alpha = scenario.alpha;
  doc.solution = Plan(planner, scenario, solver, options);
  doc.bounds = ComputeBoundReport(scenario, doc.solution, solver);
  detail::Emit(out, a.out, SolutionDocumentToJson(doc).dump(2) + "\n");
  if (!a.out.empty() && a.out != "-") {
    out << "wrote " << a.out << ": f(S) = " << doc.solution.team_reward
        << ", loop iterations " << doc.solution.loop_iterations << "\n";
  }
  return kExitOk;
}

inline int CmdAttack(const AttackArgs& a, std::ostream& out) {
  const Scenario scenario = LoadScenario(ReadFile(a.scenario));
  const SolutionDocument doc =
      SolutionDocumentFromJson(rmop::detail::ParseJson(ReadFile(a.solution)));
  const std::string digest = ScenarioDigest(scenario);
  if (doc.scenario_digest != digest) {
    Fail(ErrorKind::kDigestMismatch, "solution was planned for scenario ", doc.scenario_digest,
         " but --scenario has digest ", digest, "; refusing to evaluate");
  }
  const RewardModel model = RewardModel::FromScenario(scenario);
  const AttackModel kind = ParseAttackModel(a.model);
  const std::size_t size = a.size.value_or(doc.alpha);
  AttackOutcome outcome;
  switch (kind) {
    case AttackModel::kWorstExhaustive:
      outcome = WorstCaseAttack(model, doc.solution, size, a.guard);
      break;
    case AttackModel::kWorstGreedy:
      outcome = GreedyAttack(model, doc.solution, size);
      break;
    case AttackModel::kRandom:
      outcome = RandomAttack(model, doc.solution, size, a.seed);
      break;
    case AttackModel::kPartial:
      outcome = PartialWorstAttack(model, doc.solution, a.planned_alpha.value_or(doc.alpha),
                                   size, a.guard);
      break;
  }
  detail::Emit(out, a.out,
               AttackOutcomeToJson(outcome, digest, size, doc.solution.team_reward).dump(2) +
                   "\n");
  return kExitOk;
}

inline int CmdBench(const BenchArgs& a, std::ostream& out) {
  const Json j = rmop::detail::ParseJson(ReadFile(a.spec));
  const ExperimentSpec spec = ExperimentSpecFromJson(j);
  Scenario base;
  if (spec.scenario_file) {
    std::filesystem::path path(*spec.scenario_file);
    if (path.is_relative()) path = std::filesystem::path(a.spec).parent_path() / path;
    base = LoadScenario(ReadFile(path.string()));
  } else {
    base = GenerateScenario(*spec.generation);
  }
  const std::vector<ExperimentRecord> records = RunExperiment(spec, base);
  WriteFile(a.csv, RecordsToCsv(records));
  if (!a.summary.empty()) {
    WriteFile(a.summary, SummaryToJson(Summarize(records)).dump(2) + "\n");
  }
  out << "wrote " << records.size() << " records to " << a.csv << "\n";
  return kExitOk;
}

inline int CmdVerify(const VerifyArgs& a, std::ostream& out) {
  Json report = {{"scenario", a.scenario}};
  bool clean = true;
  Scenario scenario;
  try {
    scenario = ParseScenario(ReadFile(a.scenario));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) throw;
    ValidationReport r;
    r.Add("scenario", {}, 0.0, e.what());
    detail::PrintReport(out, "scenario", r);
    report["metric"] = ValidationReportToJson(r);
    report["clean"] = false;
    if (!a.json.empty()) WriteFile(a.json, report.dump(2) + "\n");
    return kExitFailure;
  }
  const ValidationReport metric = VerifyMetric(scenario.graph);
  detail::PrintReport(out, "metric", metric);
  report["metric"] = ValidationReportToJson(metric);
  clean = clean && metric.clean();

  if (!a.solution.empty()) {
    ValidationReport sol_report;
    try {
      const SolutionDocument doc =
          SolutionDocumentFromJson(rmop::detail::ParseJson(ReadFile(a.solution)));
      const std::string digest = ScenarioDigest(scenario);
      if (doc.scenario_digest != digest) {
        sol_report.Add("digest", {}, 0.0,
                       rmop::detail::Concat("solution digest ", doc.scenario_digest,
                                            " does not match scenario digest ", digest));
      }
      if (doc.alpha != scenario.alpha) {
        sol_report.Add("alpha", {}, 0.0,
                       rmop::detail::Concat("solution alpha ", doc.alpha,
                                            " differs from scenario alpha ", scenario.alpha));
      }
      const SolutionRole role =
          doc.planner == PlannerKind::kRmop ? SolutionRole::kRobust : SolutionRole::kBaseline;
      for (Issue& i : CheckSolution(scenario, doc.solution, role).issues) {
        sol_report.issues.push_back(std::move(i));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kIo) throw;
      sol_report.Add("solution", {}, 0.0, e.what());
    }
    detail::PrintReport(out, "solution", sol_report);
    report["solution"] = ValidationReportToJson(sol_report);
    clean = clean && sol_report.clean();
  }
  report["clean"] = clean;
  if (!a.json.empty()) WriteFile(a.json, report.dump(2) + "\n");
  return clean ? kExitOk : kExitFailure;
}

// Parses `args` (without the program name) and runs the chosen command.
inline int RunCli(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"Robust multi-robot orienteering planner", "rmop"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a scenario document");
  g->add_option("--vertices", gen.params.n_vertices, "Number of vertices")->capture_default_str();
  g->add_option("--robots", gen.params.n_robots, "Number of robots")->capture_default_str();
  g->add_option("--alpha", gen.params.alpha, "Robots the adversary removes")->capture_default_str();
  g->add_option("--budget", gen.params.budget, "Per-robot travel budget")->capture_default_str();
  g->add_option("--layout", gen.layout, "grid | uniform-random")->capture_default_str();
  g->add_option("--bumps", gen.params.importance.random_bumps,
                "Gaussian bumps in the importance field")->capture_default_str();
  g->add_option("--spacing", gen.params.spacing, "Grid spacing")->capture_default_str();
  g->add_option("--reward-kind", gen.reward_kind, "modular | coverage")->capture_default_str();
  g->add_option("--seed", gen.params.seed, "Random seed")->capture_default_str();
  g->add_option("--out", gen.out, "Output scenario file")->required();

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Plan paths for a scenario");
  s->add_option("--scenario", solve.scenario, "Scenario file")->required();
  s->add_option("--planner", solve.planner, "rmop | sga | ng")->capture_default_str();
  s->add_option("--subroutine", solve.subroutine, "exact | gcb")->capture_default_str();
  s->add_option("--out", solve.out, "Output solution file ('-' for stdout)")->required();
  s->add_flag("--mask-s1", solve.mask_s1,
              "Non-canonical: mask the redundancy paths before planning coverage paths");

  AttackArgs attack;
  std::size_t attack_size = 0;
  std::size_t planned_alpha = 0;
  auto* at = app.add_subcommand("attack", "Evaluate a solution under an attack");
  at->add_option("solution", attack.solution, "Solution file")->required();
  at->add_option("--scenario", attack.scenario, "Scenario the solution was planned for")
      ->required();
  at->add_option("--model", attack.model, "worst | greedy | random | partial")
      ->capture_default_str();
  auto* size_opt = at->add_option("--size", attack_size, "Robots removed (default: alpha)");
  auto* planned_opt =
      at->add_option("--planned-alpha", planned_alpha, "Planning alpha for partial attacks");
  at->add_option("--seed", attack.seed, "Seed for random attacks")->capture_default_str();
  at->add_option("--guard", attack.guard, "Maximum subsets the worst-case attack enumerates")
      ->capture_default_str();
  at->add_option("--out", attack.out, "Output report file (default: stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a seeded experiment");
  b->add_option("--spec", bench.spec, "Experiment spec file")->required();
  b->add_option("--csv", bench.csv, "Output CSV file")->required();
  b->add_option("--summary", bench.summary, "Output summary JSON file");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a scenario and optionally a solution");
  v->add_option("--scenario", verify.scenario, "Scenario file")->required();
  v->add_option("--solution", verify.solution, "Solution file");
  v->add_option("--json", verify.json, "Write the report as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (g->parsed()) return CmdGen(gen, out);
    if (s->parsed()) return CmdSolve(solve, out);
    if (at->parsed()) {
      if (size_opt->count() > 0) attack.size = attack_size;
      if (planned_opt->count() > 0) attack.planned_alpha = planned_alpha;
      return CmdAttack(attack, out);
    }
    if (b->parsed()) return CmdBench(bench, out);
    if (v->parsed()) return CmdVerify(verify, out);
  } catch (const Error& e) {
    err << "error (" << ToString(e.kind()) << "): " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace rmop::cli

#endif  // RMOP_CLI_HPP_
