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

// JSON documents written by the command-line tool: solutions, attack
// reports and validation reports. Keys are emitted in sorted order.

#ifndef RMOP_DOCUMENTS_HPP_
#define RMOP_DOCUMENTS_HPP_

#include <optional>
#include <string>

#include "rmop/attack.hpp"
#include "rmop/bench.hpp"
#include "rmop/planner.hpp"
#include "rmop/scenario_io.hpp"

namespace rmop {

struct SolutionDocument {
  std::string scenario_digest;
  PlannerKind planner = PlannerKind::kRmop;
  OpSolverConfig solver;
  std::size_t alpha = 0;
  Solution solution;
  std::optional<BoundReport> bounds;
};

namespace detail {

inline Json OptionalNumber(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline std::optional<double> ReadOptionalNumber(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace detail

inline Json BoundReportToJson(const BoundReport& b) {
  return Json{{"k_f", b.k_f},
              {"k_g", b.k_g},
              {"eta", b.eta},
              {"alpha", b.alpha},
              {"N", b.n},
              {"theorem1_fraction", detail::OptionalNumber(b.theorem1_fraction)},
              {"theorem2_fraction", detail::OptionalNumber(b.theorem2_fraction)},
              {"k_f_ground_set_note", b.k_f_ground_set_note},
              {"eta_note", b.eta_note}};
}

inline BoundReport BoundReportFromJson(const Json& j) {
  BoundReport b;
  b.k_f = j.at("k_f").get<double>();
  b.k_g = j.at("k_g").get<double>();
  b.eta = j.at("eta").get<double>();
  b.alpha = j.at("alpha").get<std::size_t>();
  b.n = j.at("N").get<std::size_t>();
  b.theorem1_fraction = detail::ReadOptionalNumber(j.at("theorem1_fraction"));
  b.theorem2_fraction = detail::ReadOptionalNumber(j.at("theorem2_fraction"));
  b.k_f_ground_set_note = j.at("k_f_ground_set_note").get<std::string>();
  b.eta_note = j.at("eta_note").get<std::string>();
  return b;
}

inline Json SolutionDocumentToJson(const SolutionDocument& d) {
  const Solution& s = d.solution;
  Json paths = Json::array();
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const Path& p = s.paths[i];
    paths.push_back({{"robot", p.robot},
                     {"vertices", p.vertices},
                     {"cost", p.cost},
                     {"reward", i < s.per_path_rewards.size() ? s.per_path_rewards[i] : 0.0}});
  }
  Json doc = {{"scenario_digest", d.scenario_digest},
              {"planner", ToString(d.planner)},
              {"solver", {{"method", ToString(d.solver.method)}, {"eta", d.solver.eta}}},
              {"alpha", d.alpha},
              {"paths", std::move(paths)},
              {"s1", s.s1_robots},
              {"s2", s.s2_robots},
              {"team_reward", s.team_reward},
              {"loop_iterations", s.loop_iterations},
              {"replacements", s.replacements}};
  doc["bounds"] = d.bounds ? BoundReportToJson(*d.bounds) : Json(nullptr);
  return doc;
}

inline SolutionDocument SolutionDocumentFromJson(const Json& j) {
  SolutionDocument d;
  try {
    if (!j.is_object()) Fail(ErrorKind::kParse, "solution document must be a JSON object");
    d.scenario_digest = j.at("scenario_digest").get<std::string>();
    d.planner = ParsePlanner(j.at("planner").get<std::string>());
    d.solver.method = ParseOpMethod(j.at("solver").at("method").get<std::string>());
    d.solver.eta = j.at("solver").at("eta").get<double>();
    d.alpha = j.at("alpha").get<std::size_t>();
    Solution& s = d.solution;
    for (const Json& p : j.at("paths")) {
      Path path;
      path.robot = p.at("robot").get<RobotId>();
      path.vertices = p.at("vertices").get<std::vector<VertexId>>();
      path.cost = p.at("cost").get<double>();
      s.per_path_rewards.push_back(p.at("reward").get<double>());
      s.paths.push_back(std::move(path));
    }
    s.s1_robots = j.at("s1").get<std::vector<RobotId>>();
    s.s2_robots = j.at("s2").get<std::vector<RobotId>>();
    s.team_reward = j.at("team_reward").get<double>();
    s.loop_iterations = j.at("loop_iterations").get<std::size_t>();
    if (j.contains("replacements")) {
      s.replacements = j.at("replacements").get<std::vector<std::size_t>>();
    }
    if (j.contains("bounds") && !j.at("bounds").is_null()) {
      d.bounds = BoundReportFromJson(j.at("bounds"));
    }
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParse, "malformed solution document: ", e.what());
  }
  return d;
}

inline Json AttackOutcomeToJson(const AttackOutcome& a, const std::string& digest,
                                std::size_t size, double team_reward) {
  Json doc = {{"scenario_digest", digest},
              {"model", ToString(a.model)},
              {"size", size},
              {"removed", a.removed},
              {"residual", a.residual},
              {"f_S", team_reward}};
  doc["seed"] = a.seed ? Json(*a.seed) : Json(nullptr);
  return doc;
}

inline Json ValidationReportToJson(const ValidationReport& r) {
  Json issues = Json::array();
  for (const Issue& i : r.issues) {
    issues.push_back({{"kind", i.kind},
                      {"indices", i.indices},
                      {"magnitude", i.magnitude},
                      {"message", i.message}});
  }
  return issues;
}

}  // namespace rmop

#endif  // RMOP_DOCUMENTS_HPP_
