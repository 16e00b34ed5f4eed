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

// Single-robot orienteering: find a path rooted at `start` with cost within
// the budget that maximizes g. Two solvers share one interface: an
// exhaustive search for small graphs and the generalized cost-benefit
// greedy with cheapest-insertion routing.

#ifndef RMOP_ORIENTEERING_HPP_
#define RMOP_ORIENTEERING_HPP_

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rmop/graph.hpp"
#include "rmop/reward.hpp"

namespace rmop {

enum class OpMethod { kExact, kGcb };

inline const char* ToString(OpMethod m) {
  return m == OpMethod::kExact ? "exact" : "gcb";
}

inline OpMethod ParseOpMethod(std::string_view s) {
  if (s == "exact") return OpMethod::kExact;
  if (s == "gcb") return OpMethod::kGcb;
  Fail(ErrorKind::kInvalidArgument, "unknown subroutine '", s, "' (expected exact|gcb)");
}

// eta is the approximation factor attributed to the method; it is only used
// when reporting bounds.
struct OpSolverConfig {
  OpMethod method = OpMethod::kGcb;
  double eta = 1.0;

  static OpSolverConfig Exact() { return {OpMethod::kExact, 1.0}; }
  static OpSolverConfig Gcb() {
    return {OpMethod::kGcb, 2.0 / (1.0 - std::exp(-1.0))};
  }
  static OpSolverConfig For(OpMethod m) {
    return m == OpMethod::kExact ? Exact() : Gcb();
  }
};

inline constexpr std::size_t kExactSolverMaxVertices = 14;

namespace detail {

inline bool WithinBudget(double cost, double budget) {
  return cost <= budget + kTolerance;
}

class ExactSearch {
 public:
  ExactSearch(const MetricGraph& graph, const RewardModel& model, double budget)
      : graph_(graph), budget_(budget), acc_(model), visited_(graph.size(), 0) {}

  std::vector<VertexId> Run(VertexId start) {
    path_.assign(1, start);
    visited_[start] = 1;
    acc_.Add(start);
    best_value_ = -1.0;
    Visit(start, 0.0);
    return best_;
  }

 private:
  // Depth-first over ascending vertex ids, so paths are met in
  // lexicographic order and the first path reaching the maximum is the
  // lexicographically smallest one.
  void Visit(VertexId current, double cost) {
    if (acc_.value() > best_value_ + kTolerance) {
      best_value_ = acc_.value();
      best_ = path_;
    }
    // Extensions that cannot collect anything new are never better than
    // the current path, which precedes them lexicographically.
    bool reachable_gain = false;
    for (VertexId v = 0; v < graph_.size() && !reachable_gain; ++v) {
      reachable_gain = !visited_[v] && acc_.Gain(v) > 0.0 &&
                       WithinBudget(cost + graph_.distance(current, v), budget_);
    }
    if (!reachable_gain) return;
    for (VertexId v = 0; v < graph_.size(); ++v) {
      if (visited_[v]) continue;
      const double next = cost + graph_.distance(current, v);
      if (!WithinBudget(next, budget_)) continue;
      visited_[v] = 1;
      path_.push_back(v);
      acc_.Add(v);
      Visit(v, next);
      acc_.Remove(v);
      path_.pop_back();
      visited_[v] = 0;
    }
  }

  const MetricGraph& graph_;
  double budget_;
  RewardAccumulator acc_;
  std::vector<char> visited_;
  std::vector<VertexId> path_;
  std::vector<VertexId> best_;
  double best_value_ = -1.0;
};

inline void CheckStart(const MetricGraph& graph, const RewardModel& model,
                       VertexId start) {
  if (!graph.contains(start)) {
    Fail(ErrorKind::kInvalidArgument, "start vertex ", start, " does not exist");
  }
  if (model.size() != graph.size()) {
    Fail(ErrorKind::kInvalidArgument, "reward model covers ", model.size(),
         " vertices but the graph has ", graph.size());
  }
}

}  // namespace detail

// Maximum-reward simple path rooted at `start` with cost <= budget, by
// exhaustive search. Ties go to the lexicographically smallest sequence.
inline Path SolveOpExact(const MetricGraph& graph, const RewardModel& model,
                         VertexId start, double budget, RobotId robot = 0) {
  detail::CheckStart(graph, model, start);
  if (graph.size() > kExactSolverMaxVertices) {
    Fail(ErrorKind::kGuard, "exact orienteering solver is limited to ",
         kExactSolverMaxVertices, " vertices (graph has ", graph.size(),
         "); use the gcb subroutine for larger graphs");
  }
  detail::ExactSearch search(graph, model, budget);
  return MakePath(graph, robot, search.Run(start));
}

struct RouteEstimate {
  std::vector<VertexId> ordering;
  double cost = 0.0;
};

struct Insertion {
  double increase = std::numeric_limits<double>::infinity();
  std::size_t position = 0;  // insert after ordering[position]
};

// Cheapest place to insert `v` into an open route rooted at route[0].
inline Insertion BestInsertion(const MetricGraph& graph,
                               const std::vector<VertexId>& route, VertexId v) {
  Insertion best;
  for (std::size_t i = 0; i < route.size(); ++i) {
    double increase = graph.distance(route[i], v);
    if (i + 1 < route.size()) {
      increase += graph.distance(v, route[i + 1]) -
                  graph.distance(route[i], route[i + 1]);
    }
    if (increase < best.increase - kTolerance) best = {increase, i};
  }
  return best;
}

inline void ApplyInsertion(std::vector<VertexId>& route, VertexId v,
                           const Insertion& at) {
  route.insert(route.begin() + static_cast<std::ptrdiff_t>(at.position) + 1, v);
}

// Open route through `set` rooted at `start`, built by repeatedly inserting
// the vertex whose best insertion increases the cost least. Ties go to the
// smaller vertex id, then the earlier position.
inline RouteEstimate CheapestInsertion(const MetricGraph& graph, VertexId start,
                                       std::span<const VertexId> set) {
  if (!graph.contains(start)) {
    Fail(ErrorKind::kInvalidArgument, "start vertex ", start, " does not exist");
  }
  std::vector<VertexId> remaining;
  for (VertexId v : set) {
    if (!graph.contains(v)) Fail(ErrorKind::kInvalidArgument, "vertex ", v, " does not exist");
    if (v != start) remaining.push_back(v);
  }
  std::sort(remaining.begin(), remaining.end());
  remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());

  RouteEstimate est;
  est.ordering = {start};
  while (!remaining.empty()) {
    std::size_t pick = 0;
    Insertion best;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      const Insertion ins = BestInsertion(graph, est.ordering, remaining[k]);
      if (ins.increase < best.increase - kTolerance) {
        best = ins;
        pick = k;
      }
    }
    ApplyInsertion(est.ordering, remaining[pick], best);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  est.cost = PathCost(graph, est.ordering);
  return est;
}

// Generalized cost-benefit greedy under a strict budget. Each round picks
// the candidate with the largest gain / route-cost-increase ratio (a free
// insertion ranks above any finite ratio); a pick that would break the
// budget is discarded for good. The result is the better of the greedy
// route and the best affordable two-vertex path [start, v].
inline Path SolveOpGcb(const MetricGraph& graph, const RewardModel& model,
                       VertexId start, double budget, RobotId robot = 0) {
  detail::CheckStart(graph, model, start);
  const std::size_t n = graph.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  RewardAccumulator acc(model);
  acc.Add(start);
  std::vector<VertexId> route{start};
  double cost = 0.0;
  std::vector<char> alive(n, 1);
  alive[start] = 0;

  for (;;) {
    VertexId pick = n;
    double best_ratio = -1.0;
    Insertion pick_at;
    for (VertexId v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      const double gain = acc.Gain(v);
      if (!(gain > 0.0)) continue;
      const Insertion at = BestInsertion(graph, route, v);
      const double ratio = at.increase <= kTolerance ? kInf : gain / at.increase;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        pick = v;
        pick_at = at;
      }
    }
    if (pick == n) break;
    alive[pick] = 0;
    if (detail::WithinBudget(cost + pick_at.increase, budget)) {
      ApplyInsertion(route, pick, pick_at);
      acc.Add(pick);
      cost = PathCost(graph, route);
    }
  }

  Path greedy = MakePath(graph, robot, route);
  const double greedy_value = model.Evaluate(greedy.vertices);

  VertexId best_single = n;
  double best_single_value = -1.0;
  for (VertexId v = 0; v < n; ++v) {
    if (v == start || !detail::WithinBudget(graph.distance(start, v), budget)) continue;
    const VertexId pair[] = {start, v};
    const double value = model.Evaluate(pair);
    if (value > best_single_value) {
      best_single_value = value;
      best_single = v;
    }
  }
  if (best_single != n && best_single_value > greedy_value + kTolerance) {
    return MakePath(graph, robot, {start, best_single});
  }
  return greedy;
}

inline Path SolveOp(const OpSolverConfig& config, const MetricGraph& graph,
                    const RewardModel& model, VertexId start, double budget,
                    RobotId robot = 0) {
  return config.method == OpMethod::kExact
             ? SolveOpExact(graph, model, start, budget, robot)
             : SolveOpGcb(graph, model, start, budget, robot);
}

}  // namespace rmop

#endif  // RMOP_ORIENTEERING_HPP_
