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

// Baselines, approximation-bound calculators, brute-force optima for tiny
// instances, and the seeded experiment harness.

#ifndef RMOP_BENCH_HPP_
#define RMOP_BENCH_HPP_

#include <charconv>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rmop/attack.hpp"
#include "rmop/graph.hpp"
#include "rmop/orienteering.hpp"
#include "rmop/planner.hpp"
#include "rmop/reward.hpp"
#include "rmop/scenario_io.hpp"

namespace rmop {

// Naive greedy: every robot on its own repeatedly appends the most rewarding
// unvisited vertex (ignoring travel cost) whose leg still fits the budget,
// skipping those that do not, until a full scan appends nothing.
inline std::vector<Path> NaiveGreedyBaseline(const Scenario& scenario) {
  ValidateScenario(scenario);
  const RewardModel model = RewardModel::FromScenario(scenario);
  const std::size_t n = scenario.graph.size();
  std::vector<VertexId> by_reward(n);
  std::iota(by_reward.begin(), by_reward.end(), VertexId{0});
  std::vector<double> value(n);
  for (VertexId v = 0; v < n; ++v) value[v] = model.Singleton(v);
  std::stable_sort(by_reward.begin(), by_reward.end(),
                   [&](VertexId a, VertexId b) { return value[a] > value[b]; });

  std::vector<Path> paths;
  for (RobotId r = 0; r < scenario.robots(); ++r) {
    std::vector<VertexId> route{scenario.starts[r]};
    std::vector<char> visited(n, 0);
    visited[route[0]] = 1;
    double cost = 0.0;
    for (bool appended = true; appended;) {
      appended = false;
      for (VertexId v : by_reward) {
        if (visited[v]) continue;
        const double next = cost + scenario.graph.distance(route.back(), v);
        if (next <= scenario.budget + kTolerance) {
          route.push_back(v);
          visited[v] = 1;
          cost = next;
          appended = true;
          break;
        }
      }
    }
    paths.push_back(MakePath(scenario.graph, r, std::move(route)));
  }
  return paths;
}

inline Solution NaiveGreedySolution(const Scenario& scenario) {
  std::vector<RobotId> all(scenario.robots());
  std::iota(all.begin(), all.end(), RobotId{0});
  return MakeSolution(RewardModel::FromScenario(scenario), NaiveGreedyBaseline(scenario),
                      {}, std::move(all), 0);
}

// Approximation bounds.

namespace detail {

inline void CheckBoundInputs(double k_f, double k_g, double eta) {
  if (!(k_f >= 0.0 && k_f < 1.0) || !(k_g >= 0.0 && k_g < 1.0)) {
    Fail(ErrorKind::kInvalidArgument, "curvatures must satisfy 0 <= k < 1 (k_f=", k_f,
         ", k_g=", k_g, "); the bound degenerates at curvature 1");
  }
  if (!(eta >= 1.0)) Fail(ErrorKind::kInvalidArgument, "eta must be >= 1 (got ", eta, ")");
}

}  // namespace detail

// 1 / (1/(1-k_g) + eta/(1-k_f)): the guarantee of Sga relative to the best
// multi-robot solution.
inline double Theorem1Bound(double k_f, double k_g, double eta) {
  detail::CheckBoundInputs(k_f, k_g, eta);
  return 1.0 / (1.0 / (1.0 - k_g) + eta / (1.0 - k_f));
}

// max(1-k_f, 1/(alpha+1), 1/(N-alpha)) / (1/(1-k_g) + eta/(1-k_f)): the
// guarantee of the robust planner's residual relative to the max-min optimum.
inline double Theorem2Bound(double k_f, double k_g, double eta, std::size_t alpha,
                            std::size_t n) {
  detail::CheckBoundInputs(k_f, k_g, eta);
  if (alpha == 0 || alpha >= n) {
    Fail(ErrorKind::kInvalidArgument, "bound requires 0 < alpha < N (alpha=", alpha,
         ", N=", n, ")");
  }
  const double a = static_cast<double>(alpha);
  const double rest = static_cast<double>(n - alpha);
  const double numerator = std::max({1.0 - k_f, 1.0 / (a + 1.0), 1.0 / rest});
  return numerator / (1.0 / (1.0 - k_g) + eta / (1.0 - k_f));
}

inline constexpr const char* kTeamCurvatureNote =
    "k_f is estimated with the returned N paths as the ground set (the set of all "
    "feasible paths is exponential); this is a surrogate, not the exact constant";

inline constexpr const char* kGcbEtaNote =
    "gcb runs under the strict budget; eta = 2/(1-1/e) is the factor of the "
    "budget-relaxed variant and is reported for reference only";

struct BoundReport {
  double k_f = 0.0;
  double k_g = 0.0;
  double eta = 1.0;
  std::size_t alpha = 0;
  std::size_t n = 0;
  // Empty when a curvature is 1 (bound degenerates) or, for theorem 2, when
  // alpha = 0.
  std::optional<double> theorem1_fraction;
  std::optional<double> theorem2_fraction;
  std::string k_f_ground_set_note = kTeamCurvatureNote;
  std::string eta_note;
};

inline BoundReport ComputeBoundReport(const Scenario& scenario, const Solution& sol,
                                      const OpSolverConfig& solver) {
  const RewardModel model = RewardModel::FromScenario(scenario);
  BoundReport report;
  report.k_g = VertexCurvature(model).value;
  report.k_f = TeamCurvature(model, sol.paths).value;
  report.eta = solver.eta;
  report.alpha = scenario.alpha;
  report.n = scenario.robots();
  if (solver.method == OpMethod::kGcb) report.eta_note = kGcbEtaNote;
  if (report.k_f < 1.0 && report.k_g < 1.0) {
    report.theorem1_fraction = Theorem1Bound(report.k_f, report.k_g, report.eta);
    if (report.alpha > 0) {
      report.theorem2_fraction =
          Theorem2Bound(report.k_f, report.k_g, report.eta, report.alpha, report.n);
    }
  }
  return report;
}

// Brute-force optima for tiny instances.

struct BruteForceLimits {
  // Upper bound on the number of path tuples examined.
  std::uint64_t max_tuples = 10'000'000;
};

struct BruteForceResult {
  double value = 0.0;
  std::vector<Path> witness;  // one path per robot, in robot order
};

// Every simple path rooted at `start` with cost <= budget, in depth-first
// order over ascending vertex ids.
inline std::vector<std::vector<VertexId>> EnumerateFeasiblePaths(const MetricGraph& graph,
                                                                 VertexId start,
                                                                 double budget) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path{start};
  std::vector<char> visited(graph.size(), 0);
  visited[start] = 1;
  auto visit = [&](auto&& self, double cost) -> void {
    out.push_back(path);
    for (VertexId v = 0; v < graph.size(); ++v) {
      if (visited[v]) continue;
      const double next = cost + graph.distance(path.back(), v);
      if (next > budget + kTolerance) continue;
      visited[v] = 1;
      path.push_back(v);
      self(self, next);
      path.pop_back();
      visited[v] = 0;
    }
  };
  visit(visit, 0.0);
  return out;
}

namespace detail {

// Per robot: one representative path for each distinct vertex set, with
// the set as a bitmask. f only depends on vertex sets.
struct PathOptions {
  std::vector<std::vector<VertexId>> paths;
  std::vector<std::uint64_t> masks;
};

inline std::vector<PathOptions> CollectOptions(const Scenario& s,
                                               const std::vector<RobotId>& robots,
                                               const BruteForceLimits& limits) {
  if (s.graph.size() > 64) {
    Fail(ErrorKind::kGuard, "brute force supports at most 64 vertices");
  }
  std::vector<PathOptions> options;
  long double product = 1.0L;
  for (RobotId r : robots) {
    PathOptions opt;
    std::map<std::uint64_t, bool> seen;
    for (auto& p : EnumerateFeasiblePaths(s.graph, s.starts[r], s.budget)) {
      std::uint64_t mask = 0;
      for (VertexId v : p) mask |= std::uint64_t{1} << v;
      if (seen.emplace(mask, true).second) {
        opt.paths.push_back(std::move(p));
        opt.masks.push_back(mask);
      }
    }
    product *= static_cast<long double>(opt.paths.size());
    if (product > static_cast<long double>(limits.max_tuples)) {
      Fail(ErrorKind::kGuard, "brute force would examine more than ", limits.max_tuples,
           " path tuples");
    }
    options.push_back(std::move(opt));
  }
  return options;
}

class MaskEvaluator {
 public:
  explicit MaskEvaluator(const RewardModel& model) : model_(model) {}

  double operator()(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    std::vector<VertexId> ids;
    for (VertexId v = 0; v < 64; ++v) {
      if (mask >> v & 1) ids.push_back(v);
    }
    const double value = model_.Evaluate(ids);
    cache_.emplace(mask, value);
    return value;
  }

 private:
  const RewardModel& model_;
  std::unordered_map<std::uint64_t, double> cache_;
};

// All size-k subsets of {0..n-1} as index lists.
inline std::vector<std::vector<std::size_t>> Combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// max over tuples of min over size-`alpha` removals of f(survivors).
inline BruteForceResult MaxMin(const Scenario& s, const std::vector<RobotId>& robots,
                               std::size_t alpha, const BruteForceLimits& limits) {
  const RewardModel model = RewardModel::FromScenario(s);
  const std::vector<PathOptions> options = CollectOptions(s, robots, limits);
  const std::size_t n = robots.size();
  const auto removals = Combinations(n, alpha);
  MaskEvaluator eval(model);

  std::vector<std::size_t> choice(n, 0);
  std::vector<std::size_t> best_choice(n, 0);
  double best = -1.0;
  for (;;) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& removed : removals) {
      std::uint64_t mask = 0;
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (k < removed.size() && removed[k] == i) {
          ++k;
          continue;
        }
        mask |= options[i].masks[choice[i]];
      }
      worst = std::min(worst, eval(mask));
    }
    if (worst > best + kTolerance) {
      best = worst;
      best_choice = choice;
    }
    std::size_t i = 0;
    while (i < n && ++choice[i] == options[i].paths.size()) choice[i++] = 0;
    if (i == n) break;
  }
  BruteForceResult result;
  result.value = best;
  for (std::size_t i = 0; i < n; ++i) {
    result.witness.push_back(
        MakePath(s.graph, robots[i], options[i].paths[best_choice[i]]));
  }
  return result;
}

}  // namespace detail

// f*: the max-min optimum over all budget-feasible rooted path tuples.
inline BruteForceResult BruteForceRmop(const Scenario& scenario,
                                       const BruteForceLimits& limits = {}) {
  ValidateScenario(scenario);
  std::vector<RobotId> robots(scenario.robots());
  std::iota(robots.begin(), robots.end(), RobotId{0});
  return detail::MaxMin(scenario, robots, scenario.alpha, limits);
}

// The best multi-robot value with no adversary, over `robots` (all robots
// when empty).
inline BruteForceResult BruteForceMop(const Scenario& scenario,
                                      std::vector<RobotId> robots = {},
                                      const BruteForceLimits& limits = {}) {
  ValidateScenario(scenario);
  if (robots.empty()) {
    robots.resize(scenario.robots());
    std::iota(robots.begin(), robots.end(), RobotId{0});
  }
  for (RobotId r : robots) {
    if (r >= scenario.robots()) Fail(ErrorKind::kInvalidArgument, "robot ", r, " does not exist");
  }
  return detail::MaxMin(scenario, robots, 0, limits);
}

// Experiment harness.

enum class PlannerKind { kRmop, kSga, kNg };

inline const char* ToString(PlannerKind p) {
  switch (p) {
    case PlannerKind::kRmop: return "rmop";
    case PlannerKind::kSga: return "sga";
    case PlannerKind::kNg: return "ng";
  }
  return "unknown";
}

inline PlannerKind ParsePlanner(std::string_view s) {
  if (s == "rmop") return PlannerKind::kRmop;
  if (s == "sga") return PlannerKind::kSga;
  if (s == "ng") return PlannerKind::kNg;
  Fail(ErrorKind::kInvalidArgument, "unknown planner '", s, "' (expected rmop|sga|ng)");
}

// Plans with `planner`; alpha is taken from the scenario.
inline Solution Plan(PlannerKind planner, const Scenario& scenario,
                     const OpSolverConfig& solver, const RmopOptions& options = {}) {
  switch (planner) {
    case PlannerKind::kRmop: return SolveRmop(scenario, solver, options);
    case PlannerKind::kSga: return SgaSolution(scenario, solver);
    case PlannerKind::kNg: return NaiveGreedySolution(scenario);
  }
  Fail(ErrorKind::kInvalidArgument, "unknown planner");
}

struct AttackSpec {
  AttackModel model = AttackModel::kWorstExhaustive;
  // Removal sizes; empty means "the planning alpha".
  std::vector<std::size_t> sizes;
};

struct ExperimentSpec {
  // Exactly one of these describes the base scenario.
  std::optional<GenerationParams> generation;
  std::optional<std::string> scenario_file;

  std::vector<PlannerKind> planners;
  OpMethod subroutine = OpMethod::kGcb;
  // Planning alphas; empty means the base scenario's alpha.
  std::vector<std::size_t> alphas;
  std::vector<AttackSpec> attacks;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  // When false plan_ms is written as 0 so output is byte-reproducible.
  bool timing = true;
  std::uint64_t enumeration_guard = kDefaultEnumerationGuard;
};

struct ExperimentRecord {
  std::size_t trial = 0;
  PlannerKind planner = PlannerKind::kRmop;
  // Planning alpha. Not a CSV column; used to group the summary.
  std::size_t alpha = 0;
  AttackModel attack_model = AttackModel::kWorstExhaustive;
  std::size_t attack_size = 0;
  double f_s = 0.0;
  double residual = 0.0;
  double plan_ms = 0.0;
  std::size_t loop_iters = 0;
};

inline std::uint64_t TrialSeed(std::uint64_t master, std::size_t trial) {
  return MixSeed(master ^ MixSeed(0x7472696171ULL + trial));
}

inline GenerationParams GenerationParamsFromJson(const Json& j) {
  using namespace detail;
  if (!j.is_object()) Fail(ErrorKind::kParse, "'scenario' must be an object");
  RejectUnknownKeys(j, "scenario", {"vertices", "robots", "alpha", "budget", "layout",
                                    "bumps", "reward_kind", "spacing", "seed"});
  GenerationParams p;
  if (j.contains("vertices")) p.n_vertices = RequireIndex(j["vertices"], "scenario.vertices");
  if (j.contains("robots")) p.n_robots = RequireIndex(j["robots"], "scenario.robots");
  if (j.contains("alpha")) p.alpha = RequireIndex(j["alpha"], "scenario.alpha");
  if (j.contains("budget")) p.budget = RequireNumber(j["budget"], "scenario.budget");
  if (j.contains("spacing")) p.spacing = RequireNumber(j["spacing"], "scenario.spacing");
  if (j.contains("bumps")) p.importance.random_bumps = RequireIndex(j["bumps"], "scenario.bumps");
  if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("layout")) {
    const std::string layout = j["layout"].get<std::string>();
    if (layout == "grid") {
      p.layout = Layout::kGrid;
    } else if (layout == "uniform-random" || layout == "uniform") {
      p.layout = Layout::kUniformRandom;
    } else {
      Fail(ErrorKind::kParse, "scenario.layout must be grid|uniform-random");
    }
  }
  if (j.contains("reward_kind")) p.reward_kind = ParseRewardKind(j["reward_kind"].get<std::string>());
  return p;
}

// Parses an experiment spec document. Errors are reported as kParse or
// kInvalidArgument.
inline ExperimentSpec ExperimentSpecFromJson(const Json& j) {
  using namespace detail;
  if (!j.is_object()) Fail(ErrorKind::kParse, "experiment spec must be a JSON object");
  RejectUnknownKeys(j, "experiment spec",
                    {"scenario", "scenario_file", "planners", "subroutine", "alphas",
                     "attacks", "trials", "seed", "timing", "enumeration_guard"});
  ExperimentSpec spec;
  try {
    if (j.contains("scenario") == j.contains("scenario_file")) {
      Fail(ErrorKind::kParse, "experiment spec needs exactly one of 'scenario' and 'scenario_file'");
    }
    if (j.contains("scenario")) spec.generation = GenerationParamsFromJson(j["scenario"]);
    if (j.contains("scenario_file")) spec.scenario_file = j["scenario_file"].get<std::string>();
    const Json& planners = Require(j, "planners", "experiment spec");
    if (!planners.is_array() || planners.empty()) {
      Fail(ErrorKind::kParse, "'planners' must be a non-empty array");
    }
    for (const Json& p : planners) spec.planners.push_back(ParsePlanner(p.get<std::string>()));
    if (j.contains("subroutine")) spec.subroutine = ParseOpMethod(j["subroutine"].get<std::string>());
    if (j.contains("alphas")) {
      for (const Json& a : j["alphas"]) spec.alphas.push_back(RequireIndex(a, "alphas entry"));
    }
    const Json& attacks = Require(j, "attacks", "experiment spec");
    if (!attacks.is_array()) Fail(ErrorKind::kParse, "'attacks' must be an array");
    for (const Json& a : attacks) {
      if (!a.is_object()) Fail(ErrorKind::kParse, "attack entries must be objects");
      RejectUnknownKeys(a, "attack", {"model", "sizes"});
      AttackSpec as;
      as.model = ParseAttackModel(Require(a, "model", "attack").get<std::string>());
      if (a.contains("sizes")) {
        for (const Json& s : a["sizes"]) as.sizes.push_back(RequireIndex(s, "attack size"));
      }
      if (as.model == AttackModel::kPartial && as.sizes.empty()) {
        Fail(ErrorKind::kParse, "partial attacks need explicit 'sizes'");
      }
      spec.attacks.push_back(std::move(as));
    }
    spec.trials = RequireIndex(Require(j, "trials", "experiment spec"), "trials");
    spec.seed = Require(j, "seed", "experiment spec").get<std::uint64_t>();
    if (j.contains("timing")) spec.timing = j["timing"].get<bool>();
    if (j.contains("enumeration_guard")) spec.enumeration_guard = j["enumeration_guard"].get<std::uint64_t>();
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParse, "experiment spec: ", e.what());
  }
  return spec;
}

// Checks the spec against the base scenario it will run on.
inline void ValidateExperiment(const ExperimentSpec& spec, const Scenario& base) {
  const std::size_t n = base.robots();
  const std::vector<std::size_t> alphas =
      spec.alphas.empty() ? std::vector<std::size_t>{base.alpha} : spec.alphas;
  for (std::size_t a : alphas) {
    if (a >= n) Fail(ErrorKind::kInvalidArgument, "alpha ", a, " must be < N (", n, ")");
  }
  for (const AttackSpec& as : spec.attacks) {
    if (as.model == AttackModel::kPartial) {
      if (alphas.size() != 1) {
        Fail(ErrorKind::kInvalidArgument, "partial attacks require exactly one planning alpha");
      }
      for (std::size_t s : as.sizes) {
        if (s > alphas[0]) {
          Fail(ErrorKind::kInvalidArgument, "partial attack size ", s,
               " exceeds the planning alpha ", alphas[0]);
        }
      }
    }
    for (std::size_t s : as.sizes) {
      if (s >= n) Fail(ErrorKind::kInvalidArgument, "attack size ", s, " must be < N (", n, ")");
    }
  }
}

// Runs every trial: resample starts, plan with each planner (per alpha for
// the robust planner), apply each attack. Records come out in (trial,
// planner, alpha, attack, size) order.
inline std::vector<ExperimentRecord> RunExperiment(const ExperimentSpec& spec,
                                                   const Scenario& base) {
  ValidateScenario(base);
  ValidateExperiment(spec, base);
  const std::vector<std::size_t> alphas =
      spec.alphas.empty() ? std::vector<std::size_t>{base.alpha} : spec.alphas;
  const OpSolverConfig solver = OpSolverConfig::For(spec.subroutine);
  const RewardModel model = RewardModel::FromScenario(base);
  std::vector<ExperimentRecord> records;

  for (std::size_t trial = 0; trial < spec.trials; ++trial) {
    const std::uint64_t trial_seed = TrialSeed(spec.seed, trial);
    Scenario scenario = base;
    scenario.starts = SampleStarts(base.graph.size(), base.robots(), trial_seed);

    for (PlannerKind planner : spec.planners) {
      std::optional<Solution> shared;
      double shared_ms = 0.0;
      for (std::size_t alpha : alphas) {
        scenario.alpha = alpha;
        Solution sol;
        double ms = 0.0;
        if (planner != PlannerKind::kRmop && shared) {
          sol = *shared;
          ms = shared_ms;
        } else {
          const auto t0 = std::chrono::steady_clock::now();
          sol = Plan(planner, scenario, solver);
          const auto t1 = std::chrono::steady_clock::now();
          ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          if (planner != PlannerKind::kRmop) {
            shared = sol;
            shared_ms = ms;
          }
        }
        for (const AttackSpec& as : spec.attacks) {
          const std::vector<std::size_t> sizes =
              as.sizes.empty() ? std::vector<std::size_t>{alpha} : as.sizes;
          for (std::size_t size : sizes) {
            AttackOutcome out;
            switch (as.model) {
              case AttackModel::kWorstExhaustive:
                out = WorstCaseAttack(model, sol, size, spec.enumeration_guard);
                break;
              case AttackModel::kWorstGreedy:
                out = GreedyAttack(model, sol, size);
                break;
              case AttackModel::kRandom:
                out = RandomAttack(model, sol, size,
                                   MixSeed(trial_seed ^ MixSeed(alpha * 1000003ULL + size)));
                break;
              case AttackModel::kPartial:
                out = PartialWorstAttack(model, sol, alpha, size, spec.enumeration_guard);
                break;
            }
            ExperimentRecord rec;
            rec.trial = trial;
            rec.planner = planner;
            rec.alpha = alpha;
            rec.attack_model = as.model;
            rec.attack_size = size;
            rec.f_s = sol.team_reward;
            rec.residual = out.residual;
            rec.plan_ms = spec.timing ? ms : 0.0;
            rec.loop_iters = sol.loop_iterations;
            records.push_back(rec);
          }
        }
      }
    }
  }
  return records;
}

inline std::string FormatNumber(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

inline constexpr const char* kCsvHeader =
    "trial,planner,attack_model,attack_size,f_S,residual,plan_ms,loop_iters";

// RFC 4180 CSV with CRLF line endings. No field needs quoting.
inline std::string RecordsToCsv(const std::vector<ExperimentRecord>& records) {
  std::string out = std::string(kCsvHeader) + "\r\n";
  for (const ExperimentRecord& r : records) {
    out += std::to_string(r.trial) + ',' + ToString(r.planner) + ',' +
           ToString(r.attack_model) + ',' + std::to_string(r.attack_size) + ',' +
           FormatNumber(r.f_s) + ',' + FormatNumber(r.residual) + ',' +
           FormatNumber(r.plan_ms) + ',' + std::to_string(r.loop_iters) + "\r\n";
  }
  return out;
}

struct SummaryRow {
  PlannerKind planner = PlannerKind::kRmop;
  std::size_t alpha = 0;
  AttackModel attack_model = AttackModel::kWorstExhaustive;
  std::size_t attack_size = 0;
  std::size_t count = 0;
  double mean_residual = 0.0;
  double variance_residual = 0.0;  // sample variance, 0 for a single trial
  double mean_f_s = 0.0;
  double mean_plan_ms = 0.0;
};

// Mean and variance of the residual per (planner, alpha, attack model, size).
inline std::vector<SummaryRow> Summarize(const std::vector<ExperimentRecord>& records) {
  std::map<std::tuple<int, std::size_t, int, std::size_t>, std::vector<const ExperimentRecord*>>
      groups;
  for (const ExperimentRecord& r : records) {
    groups[{static_cast<int>(r.planner), r.alpha, static_cast<int>(r.attack_model),
            r.attack_size}]
        .push_back(&r);
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, members] : groups) {
    SummaryRow row;
    row.planner = static_cast<PlannerKind>(std::get<0>(key));
    row.alpha = std::get<1>(key);
    row.attack_model = static_cast<AttackModel>(std::get<2>(key));
    row.attack_size = std::get<3>(key);
    row.count = members.size();
    for (const ExperimentRecord* r : members) {
      row.mean_residual += r->residual;
      row.mean_f_s += r->f_s;
      row.mean_plan_ms += r->plan_ms;
    }
    const double n = static_cast<double>(row.count);
    row.mean_residual /= n;
    row.mean_f_s /= n;
    row.mean_plan_ms /= n;
    if (row.count > 1) {
      double ss = 0.0;
      for (const ExperimentRecord* r : members) {
        ss += (r->residual - row.mean_residual) * (r->residual - row.mean_residual);
      }
      row.variance_residual = ss / (n - 1.0);
    }
    rows.push_back(row);
  }
  return rows;
}

inline Json SummaryToJson(const std::vector<SummaryRow>& rows) {
  Json groups = Json::array();
  for (const SummaryRow& r : rows) {
    groups.push_back({{"planner", ToString(r.planner)},
                      {"alpha", r.alpha},
                      {"attack_model", ToString(r.attack_model)},
                      {"attack_size", r.attack_size},
                      {"trials", r.count},
                      {"mean_residual", r.mean_residual},
                      {"variance_residual", r.variance_residual},
                      {"mean_f_S", r.mean_f_s},
                      {"mean_plan_ms", r.mean_plan_ms}});
  }
  return Json{{"groups", std::move(groups)}};
}

}  // namespace rmop

#endif  // RMOP_BENCH_HPP_
