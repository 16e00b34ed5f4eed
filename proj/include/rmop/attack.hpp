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

// Adversaries that remove robots from a solution, and the residual team
// reward of the survivors.

#ifndef RMOP_ATTACK_HPP_
#define RMOP_ATTACK_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "rmop/planner.hpp"
#include "rmop/reward.hpp"

namespace rmop {

enum class AttackModel { kWorstExhaustive, kWorstGreedy, kRandom, kPartial };

inline const char* ToString(AttackModel m) {
  switch (m) {
    case AttackModel::kWorstExhaustive: return "worst";
    case AttackModel::kWorstGreedy: return "greedy";
    case AttackModel::kRandom: return "random";
    case AttackModel::kPartial: return "partial";
  }
  return "unknown";
}

inline AttackModel ParseAttackModel(std::string_view s) {
  if (s == "worst") return AttackModel::kWorstExhaustive;
  if (s == "greedy") return AttackModel::kWorstGreedy;
  if (s == "random") return AttackModel::kRandom;
  if (s == "partial") return AttackModel::kPartial;
  Fail(ErrorKind::kInvalidArgument, "unknown attack model '", s,
       "' (expected worst|greedy|random|partial)");
}

struct AttackOutcome {
  std::vector<RobotId> removed;  // ascending
  double residual = 0.0;
  AttackModel model = AttackModel::kWorstExhaustive;
  std::optional<std::uint64_t> seed;
};

inline constexpr std::uint64_t kDefaultEnumerationGuard = 1'000'000;

// f of the paths whose robots are not in `removed` (sorted ascending).
inline double Residual(const RewardModel& model, const Solution& sol,
                       const std::vector<RobotId>& removed) {
  std::vector<Path> survivors;
  std::size_t k = 0;
  for (const Path& p : sol.paths) {
    while (k < removed.size() && removed[k] < p.robot) ++k;
    if (k < removed.size() && removed[k] == p.robot) continue;
    survivors.push_back(p);
  }
  return EvalTeam(model, survivors);
}

// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t BinomialCoefficient(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

namespace detail {

inline void CheckAttackSize(const Solution& sol, std::size_t size) {
  if (size >= std::max<std::size_t>(sol.paths.size(), 1)) {
    Fail(ErrorKind::kInvalidArgument, "attack size ", size,
         " must be smaller than the number of robots (", sol.paths.size(), ")");
  }
}

}  // namespace detail

// A*(S): exhaustive search over all removals of exactly `size` robots (f is
// monotone, so a minimizer of that size exists). Ties go to the
// lexicographically smallest index set.
inline AttackOutcome WorstCaseAttack(const RewardModel& model, const Solution& sol,
                                     std::size_t size,
                                     std::uint64_t guard = kDefaultEnumerationGuard) {
  detail::CheckAttackSize(sol, size);
  const std::size_t n = sol.paths.size();
  const std::uint64_t count = BinomialCoefficient(n, size);
  if (count > guard) {
    Fail(ErrorKind::kGuard, "worst-case attack would enumerate ", count,
         " subsets (guard ", guard, "); use the greedy attack instead");
  }
  std::vector<RobotId> subset(size);
  std::vector<RobotId> robots;
  for (const Path& p : sol.paths) robots.push_back(p.robot);

  std::vector<std::size_t> pos(size);
  for (std::size_t i = 0; i < size; ++i) pos[i] = i;
  AttackOutcome best;
  best.model = AttackModel::kWorstExhaustive;
  bool first = true;
  for (;;) {
    for (std::size_t i = 0; i < size; ++i) subset[i] = robots[pos[i]];
    const double residual = Residual(model, sol, subset);
    if (first || residual < best.residual - kTolerance) {
      best.residual = residual;
      best.removed = subset;
      first = false;
    }
    // Next combination in lexicographic order.
    std::size_t i = size;
    while (i > 0 && pos[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
  }
  return best;
}

// Removes, `size` times, the robot whose removal lowers the residual most
// (ties to the smaller index). An upper bound on the worst-case residual.
inline AttackOutcome GreedyAttack(const RewardModel& model, const Solution& sol,
                                  std::size_t size) {
  detail::CheckAttackSize(sol, size);
  AttackOutcome out;
  out.model = AttackModel::kWorstGreedy;
  out.residual = Residual(model, sol, {});
  for (std::size_t step = 0; step < size; ++step) {
    double best = std::numeric_limits<double>::infinity();
    RobotId pick = 0;
    for (const Path& p : sol.paths) {
      if (std::binary_search(out.removed.begin(), out.removed.end(), p.robot)) continue;
      std::vector<RobotId> trial = out.removed;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), p.robot), p.robot);
      const double residual = Residual(model, sol, trial);
      if (residual < best - kTolerance) {
        best = residual;
        pick = p.robot;
      }
    }
    out.removed.insert(std::upper_bound(out.removed.begin(), out.removed.end(), pick), pick);
    out.residual = best;
  }
  return out;
}

// Uniformly random removal of exactly `size` robots, reproducible per seed.
inline AttackOutcome RandomAttack(const RewardModel& model, const Solution& sol,
                                  std::size_t size, std::uint64_t seed) {
  detail::CheckAttackSize(sol, size);
  Rng rng(seed);
  AttackOutcome out;
  out.model = AttackModel::kRandom;
  out.seed = seed;
  for (std::size_t i : rng.Sample(sol.paths.size(), size)) {
    out.removed.push_back(sol.paths[i].robot);
  }
  std::sort(out.removed.begin(), out.removed.end());
  out.residual = Residual(model, sol, out.removed);
  return out;
}

// The planner assumed `planned_alpha` failures; the attacker removes the
// worst `actual_size` robots.
inline AttackOutcome PartialWorstAttack(const RewardModel& model, const Solution& sol,
                                        std::size_t planned_alpha, std::size_t actual_size,
                                        std::uint64_t guard = kDefaultEnumerationGuard) {
  if (actual_size > planned_alpha) {
    Fail(ErrorKind::kInvalidArgument, "partial attack size ", actual_size,
         " exceeds the planned alpha ", planned_alpha);
  }
  AttackOutcome out = WorstCaseAttack(model, sol, actual_size, guard);
  out.model = AttackModel::kPartial;
  return out;
}

}  // namespace rmop

#endif  // RMOP_ATTACK_HPP_
