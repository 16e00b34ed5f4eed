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

// Multi-robot planners.
//
// Sga plans robots one at a time, masking the vertices each path visits so
// later robots are only paid for new reward.
//
// SolveRmop builds a solution robust to the removal of alpha robots. Every
// robot first gets an independent single-robot path (the table M). The
// alpha robots whose paths are individually best form the redundancy set
// S1 and keep those paths; the remaining robots form the coverage set S2
// and are planned with Sga. The result must satisfy
//
//   min over S1 of g(P) >= max over S2 of g(P)
//
// and whenever an S2 path beats an S1 path it replaces that robot's entry
// in M and the split is recomputed. Each repeat strictly improves some
// entry of M, so the loop terminates; a hard cap turns a bug into an error.

#ifndef RMOP_PLANNER_HPP_
#define RMOP_PLANNER_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "rmop/graph.hpp"
#include "rmop/orienteering.hpp"
#include "rmop/reward.hpp"

namespace rmop {

struct RobotStart {
  RobotId robot = 0;
  VertexId vertex = 0;
};

struct SgaTrace {
  std::vector<RobotId> order;
  // f(X + P) - f(X) for the path chosen at each step.
  std::vector<double> marginal_gains;
  // Masked vertices when the step was planned.
  std::vector<std::size_t> masked_counts;
};

struct SgaResult {
  std::vector<Path> paths;  // in planning order
  SgaTrace trace;
};

inline SgaResult Sga(const MetricGraph& graph, const RewardModel& model,
                     std::span<const RobotStart> starts, double budget,
                     const OpSolverConfig& solver) {
  SgaResult result;
  RewardModel current = model;
  for (const RobotStart& s : starts) {
    result.trace.order.push_back(s.robot);
    result.trace.masked_counts.push_back(current.masked_count());
    Path p = SolveOp(solver, graph, current, s.vertex, budget, s.robot);
    result.trace.marginal_gains.push_back(current.Evaluate(p.vertices));
    current = current.Masked(p.vertices);
    result.paths.push_back(std::move(p));
  }
  return result;
}

struct Solution {
  std::vector<Path> paths;  // paths[r] belongs to robot r
  std::vector<RobotId> s1_robots;
  std::vector<RobotId> s2_robots;
  double team_reward = 0.0;
  std::size_t loop_iterations = 0;
  std::vector<double> per_path_rewards;
  // Number of table entries replaced at the end of each repeated iteration.
  std::vector<std::size_t> replacements;
};

// Assembles a Solution and fills in the derived rewards.
inline Solution MakeSolution(const RewardModel& model, std::vector<Path> paths,
                             std::vector<RobotId> s1, std::vector<RobotId> s2,
                             std::size_t loop_iterations = 0) {
  Solution sol;
  std::sort(paths.begin(), paths.end(),
            [](const Path& a, const Path& b) { return a.robot < b.robot; });
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  sol.paths = std::move(paths);
  sol.s1_robots = std::move(s1);
  sol.s2_robots = std::move(s2);
  sol.loop_iterations = loop_iterations;
  const RewardModel plain = model.Unmasked();
  for (const Path& p : sol.paths) sol.per_path_rewards.push_back(plain.Evaluate(p.vertices));
  sol.team_reward = EvalTeam(plain, sol.paths);
  return sol;
}

inline std::vector<RobotStart> AllRobots(const Scenario& s) {
  std::vector<RobotStart> starts;
  for (RobotId r = 0; r < s.robots(); ++r) starts.push_back({r, s.starts[r]});
  return starts;
}

// Sga over every robot in index order, packaged as a baseline solution with
// an empty S1.
inline Solution SgaSolution(const Scenario& scenario, const OpSolverConfig& solver) {
  ValidateScenario(scenario);
  const RewardModel model = RewardModel::FromScenario(scenario);
  const std::vector<RobotStart> starts = AllRobots(scenario);
  SgaResult r = Sga(scenario.graph, model, starts, scenario.budget, solver);
  std::vector<RobotId> all(scenario.robots());
  std::iota(all.begin(), all.end(), RobotId{0});
  return MakeSolution(model, std::move(r.paths), {}, std::move(all), 0);
}

struct RmopOptions {
  // Non-canonical: mask S1's vertices before planning S2.
  bool mask_s1 = false;
  // The loop fails after loop_cap_per_robot * N iterations.
  std::size_t loop_cap_per_robot = 10;
};

inline Solution SolveRmop(const Scenario& scenario, const OpSolverConfig& solver,
                          const RmopOptions& options = {}) {
  ValidateScenario(scenario);
  const std::size_t n = scenario.robots();
  const std::size_t alpha = scenario.alpha;
  if (alpha == 0) return SgaSolution(scenario, solver);
  const RewardModel model = RewardModel::FromScenario(scenario);

  std::vector<Path> table;
  std::vector<double> table_reward;
  for (RobotId r = 0; r < n; ++r) {
    table.push_back(SolveOp(solver, scenario.graph, model, scenario.starts[r],
                            scenario.budget, r));
    table_reward.push_back(model.Evaluate(table.back().vertices));
  }

  const std::size_t cap = options.loop_cap_per_robot * n;
  std::vector<std::size_t> replacements;
  for (std::size_t iteration = 1; iteration <= cap; ++iteration) {
    std::vector<RobotId> order(n);
    std::iota(order.begin(), order.end(), RobotId{0});
    std::stable_sort(order.begin(), order.end(), [&](RobotId a, RobotId b) {
      return table_reward[a] > table_reward[b];
    });
    std::vector<RobotId> s1(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(alpha));
    std::vector<RobotId> s2(order.begin() + static_cast<std::ptrdiff_t>(alpha), order.end());
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());

    std::vector<RobotStart> rest;
    for (RobotId r : s2) rest.push_back({r, scenario.starts[r]});
    RewardModel s2_model = model;
    if (options.mask_s1) {
      for (RobotId r : s1) s2_model = s2_model.Masked(table[r].vertices);
    }
    SgaResult sga = Sga(scenario.graph, s2_model, rest, scenario.budget, solver);

    double min_s1 = std::numeric_limits<double>::infinity();
    for (RobotId r : s1) min_s1 = std::min(min_s1, table_reward[r]);
    std::vector<double> s2_reward;
    double max_s2 = 0.0;
    for (const Path& p : sga.paths) {
      s2_reward.push_back(model.Evaluate(p.vertices));
      max_s2 = std::max(max_s2, s2_reward.back());
    }

    if (min_s1 >= max_s2 - kTolerance) {
      std::vector<Path> paths = std::move(sga.paths);
      for (RobotId r : s1) paths.push_back(table[r]);
      Solution sol = MakeSolution(model, std::move(paths), std::move(s1),
                                  std::move(s2), iteration);
      sol.replacements = std::move(replacements);
      return sol;
    }

    // Table entries of S2 robots are <= min_s1, so every path beating an S1
    // path is a strict improvement.
    std::size_t replaced = 0;
    for (std::size_t k = 0; k < sga.paths.size(); ++k) {
      const RobotId r = sga.paths[k].robot;
      if (s2_reward[k] > min_s1 + kTolerance && s2_reward[k] > table_reward[r] + kTolerance) {
        table[r] = sga.paths[k];
        table_reward[r] = s2_reward[k];
        ++replaced;
      }
    }
    if (replaced == 0) {
      Fail(ErrorKind::kInvariant, "robust planner made no progress in iteration ",
           iteration);
    }
    replacements.push_back(replaced);
  }
  Fail(ErrorKind::kLoopCap, "robust planner loop exceeded ", cap,
       " iterations without restoring the S1 >= S2 invariant");
}

enum class SolutionRole {
  kRobust,    // |S1| = alpha (0 when alpha = 0)
  kBaseline,  // S1 empty
};

// Checks every Solution invariant against the scenario and recomputes the
// rewards. Violations are reported, not thrown.
inline ValidationReport CheckSolution(const Scenario& scenario, const Solution& sol,
                                      SolutionRole role = SolutionRole::kRobust) {
  ValidationReport report;
  const std::size_t n = scenario.robots();
  const RewardModel model = RewardModel::FromScenario(scenario);

  if (sol.paths.size() != n) {
    report.Add("path_count", {}, 0.0,
               detail::Concat("solution has ", sol.paths.size(), " paths for ", n, " robots"));
  }
  std::vector<double> rewards(sol.paths.size(), 0.0);
  bool paths_valid = true;
  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    const Path& p = sol.paths[i];
    if (p.robot != i) {
      report.Add("robot_index", {i}, 0.0,
                 detail::Concat("path ", i, " is labelled robot ", p.robot));
    }
    if (p.vertices.empty()) {
      report.Add("root", {i}, 0.0, detail::Concat("robot ", i, " has an empty path"));
      paths_valid = false;
      continue;
    }
    if (i < n && p.vertices.front() != scenario.starts[i]) {
      report.Add("root", {i}, 0.0,
                 detail::Concat("robot ", i, " path starts at ", p.vertices.front(),
                                " instead of ", scenario.starts[i]));
    }
    double cost = 0.0;
    try {
      cost = PathCost(scenario.graph, p.vertices);
      rewards[i] = model.Evaluate(p.vertices);
    } catch (const Error& e) {
      report.Add("path", {i}, 0.0, detail::Concat("robot ", i, ": ", e.what()));
      paths_valid = false;
      continue;
    }
    if (std::abs(cost - p.cost) > 1e-6 * std::max(1.0, cost)) {
      report.Add("cost", {i}, std::abs(cost - p.cost),
                 detail::Concat("robot ", i, " stores cost ", p.cost, " but the path costs ", cost));
    }
    if (cost > scenario.budget + kTolerance) {
      report.Add("budget", {i}, cost - scenario.budget,
                 detail::Concat("robot ", i, " path cost ", cost, " exceeds budget ",
                                scenario.budget, " by ", cost - scenario.budget));
    }
  }

  std::vector<int> membership(n, 0);
  auto mark = [&](const std::vector<RobotId>& set, const char* name) {
    for (RobotId r : set) {
      if (r >= n) {
        report.Add("partition", {r}, 0.0, detail::Concat(name, " names robot ", r, " out of range"));
      } else {
        ++membership[r];
      }
    }
  };
  mark(sol.s1_robots, "s1");
  mark(sol.s2_robots, "s2");
  for (RobotId r = 0; r < n; ++r) {
    if (membership[r] != 1) {
      report.Add("partition", {r}, 0.0,
                 detail::Concat("robot ", r, " appears ", membership[r],
                                " times across s1 and s2"));
    }
  }
  const std::size_t expected_s1 = role == SolutionRole::kBaseline ? 0 : scenario.alpha;
  if (sol.s1_robots.size() != expected_s1) {
    report.Add("s1_size", {}, 0.0,
               detail::Concat("s1 has ", sol.s1_robots.size(), " robots, expected ", expected_s1));
  }

  if (paths_valid && sol.paths.size() == n) {
    double min_s1 = std::numeric_limits<double>::infinity();
    double max_s2 = -std::numeric_limits<double>::infinity();
    RobotId weakest = 0, strongest = 0;
    for (RobotId r : sol.s1_robots) {
      if (r < n && rewards[r] < min_s1) min_s1 = rewards[r], weakest = r;
    }
    for (RobotId r : sol.s2_robots) {
      if (r < n && rewards[r] > max_s2) max_s2 = rewards[r], strongest = r;
    }
    if (!sol.s1_robots.empty() && !sol.s2_robots.empty() && max_s2 > min_s1 + kTolerance) {
      report.Add("s1_s2_invariant", {weakest, strongest}, max_s2 - min_s1,
                 detail::Concat("S2 robot ", strongest, " (", max_s2,
                                ") outranks S1 robot ", weakest, " (", min_s1, ")"));
    }
    const double team = EvalTeam(model, sol.paths);
    if (std::abs(team - sol.team_reward) > 1e-6 * std::max(1.0, team)) {
      report.Add("team_reward", {}, std::abs(team - sol.team_reward),
                 detail::Concat("stored team reward ", sol.team_reward, " but f(S) = ", team));
    }
    if (sol.per_path_rewards.size() != n) {
      report.Add("per_path_rewards", {}, 0.0, "per-path reward list has the wrong length");
    } else {
      for (RobotId r = 0; r < n; ++r) {
        if (std::abs(rewards[r] - sol.per_path_rewards[r]) > 1e-6 * std::max(1.0, rewards[r])) {
          report.Add("per_path_rewards", {r}, std::abs(rewards[r] - sol.per_path_rewards[r]),
                     detail::Concat("robot ", r, " stores reward ", sol.per_path_rewards[r],
                                    " but g(P) = ", rewards[r]));
        }
      }
    }
  }
  return report;
}

}  // namespace rmop

#endif  // RMOP_PLANNER_HPP_
