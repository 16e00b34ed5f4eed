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

// Scenario documents (JSON). Top-level keys: vertices, distance_matrix
// (optional), starts, budget, alpha, reward_kind. Unknown keys are rejected.

#ifndef RMOP_SCENARIO_IO_HPP_
#define RMOP_SCENARIO_IO_HPP_

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rmop/graph.hpp"

namespace rmop {

using Json = nlohmann::json;

namespace detail {

inline void RejectUnknownKeys(const Json& object, std::string_view where,
                              std::initializer_list<std::string_view> known) {
  for (const auto& item : object.items()) {
    bool ok = false;
    for (std::string_view k : known) ok = ok || item.key() == k;
    if (!ok) {
      Fail(ErrorKind::kParse, "unknown key '", item.key(), "' in ", where);
    }
  }
}

inline const Json& Require(const Json& object, const char* key,
                           std::string_view where) {
  auto it = object.find(key);
  if (it == object.end()) {
    Fail(ErrorKind::kParse, "missing key '", key, "' in ", where);
  }
  return *it;
}

inline double RequireNumber(const Json& value, std::string_view what) {
  if (!value.is_number()) Fail(ErrorKind::kParse, what, " must be a number");
  return value.get<double>();
}

inline std::size_t RequireIndex(const Json& value, std::string_view what) {
  if (!value.is_number_integer() ||
      (value.is_number_integer() && !value.is_number_unsigned() &&
       value.get<std::int64_t>() < 0)) {
    Fail(ErrorKind::kParse, what, " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

inline Json ParseJson(std::string_view bytes) {
  try {
    return Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    Fail(ErrorKind::kParse, "malformed JSON: ", e.what());
  }
}

}  // namespace detail

inline RewardKind ParseRewardKind(std::string_view s) {
  if (s == "modular") return RewardKind::kModular;
  if (s == "coverage") return RewardKind::kCoverage;
  Fail(ErrorKind::kParse, "reward_kind must be \"modular\" or \"coverage\", got \"", s, "\"");
}

// Builds a Scenario and checks structural and scenario invariants, but not
// metric properties. Use LoadScenario for planning inputs.
inline Scenario ScenarioFromJson(const Json& doc) {
  using namespace detail;
  if (!doc.is_object()) Fail(ErrorKind::kParse, "scenario document must be a JSON object");
  RejectUnknownKeys(doc, "scenario",
                    {"vertices", "distance_matrix", "starts", "budget", "alpha",
                     "reward_kind"});

  const Json& jv = Require(doc, "vertices", "scenario");
  if (!jv.is_array()) Fail(ErrorKind::kParse, "'vertices' must be an array");
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const Json& o = jv[i];
    const std::string where = Concat("vertices[", i, "]");
    if (!o.is_object()) Fail(ErrorKind::kParse, where, " must be an object");
    RejectUnknownKeys(o, where, {"id", "x", "y", "reward", "coverage"});
    Vertex v;
    v.id = RequireIndex(Require(o, "id", where), where + ".id");
    v.position.x = RequireNumber(Require(o, "x", where), where + ".x");
    v.position.y = RequireNumber(Require(o, "y", where), where + ".y");
    v.base_reward = RequireNumber(Require(o, "reward", where), where + ".reward");
    if (auto it = o.find("coverage"); it != o.end()) {
      if (!it->is_array()) Fail(ErrorKind::kParse, where, ".coverage must be an array");
      for (const Json& pair : *it) {
        if (!pair.is_array() || pair.size() != 2) {
          Fail(ErrorKind::kParse, where, ".coverage entries must be [cell, weight]");
        }
        v.coverage.push_back({RequireIndex(pair[0], where + ".coverage cell"),
                              RequireNumber(pair[1], where + ".coverage weight")});
      }
    }
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });

  Scenario s;
  if (auto it = doc.find("distance_matrix"); it != doc.end()) {
    if (!it->is_array()) Fail(ErrorKind::kParse, "'distance_matrix' must be an array of arrays");
    std::vector<std::vector<double>> matrix;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& row = (*it)[i];
      if (!row.is_array()) Fail(ErrorKind::kParse, "distance_matrix row ", i, " must be an array");
      std::vector<double> r;
      for (std::size_t j = 0; j < row.size(); ++j) {
        r.push_back(RequireNumber(row[j], Concat("distance_matrix[", i, "][", j, "]")));
      }
      matrix.push_back(std::move(r));
    }
    s.graph = MetricGraph(std::move(vertices), matrix);
  } else {
    s.graph = MetricGraph(std::move(vertices));
  }

  const Json& js = Require(doc, "starts", "scenario");
  if (!js.is_array()) Fail(ErrorKind::kParse, "'starts' must be an array");
  for (std::size_t r = 0; r < js.size(); ++r) {
    s.starts.push_back(RequireIndex(js[r], Concat("starts[", r, "]")));
  }
  s.budget = RequireNumber(Require(doc, "budget", "scenario"), "budget");
  s.alpha = RequireIndex(Require(doc, "alpha", "scenario"), "alpha");
  const Json& jk = Require(doc, "reward_kind", "scenario");
  if (!jk.is_string()) Fail(ErrorKind::kParse, "'reward_kind' must be a string");
  s.reward_kind = ParseRewardKind(jk.get<std::string>());
  ValidateScenario(s);
  return s;
}

inline Scenario ParseScenario(std::string_view bytes) {
  return ScenarioFromJson(detail::ParseJson(bytes));
}

// Parses and validates a scenario including the metric check; the first
// violation is reported with its offending indices.
inline Scenario LoadScenario(std::string_view bytes) {
  Scenario s = ParseScenario(bytes);
  const ValidationReport report = VerifyMetric(s.graph);
  if (!report.clean()) {
    const Issue& first = report.issues.front();
    Fail(ErrorKind::kInvariant, "distance matrix is not metric: ", first.kind,
         " violation: ", first.message, " (", report.issues.size(),
         " violation(s) in total)");
  }
  return s;
}

inline Json ScenarioToJson(const Scenario& s) {
  Json vertices = Json::array();
  for (const Vertex& v : s.graph.vertices()) {
    Json o = {{"id", v.id}, {"x", v.position.x}, {"y", v.position.y},
              {"reward", v.base_reward}};
    if (!v.coverage.empty()) {
      Json cov = Json::array();
      for (const CoverageEntry& c : v.coverage) cov.push_back({c.cell, c.weight});
      o["coverage"] = std::move(cov);
    }
    vertices.push_back(std::move(o));
  }
  Json doc = {{"vertices", std::move(vertices)},
              {"starts", s.starts},
              {"budget", s.budget},
              {"alpha", s.alpha},
              {"reward_kind", ToString(s.reward_kind)}};
  if (s.graph.has_explicit_distances()) {
    Json matrix = Json::array();
    for (std::size_t i = 0; i < s.graph.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < s.graph.size(); ++j) row.push_back(s.graph.distance(i, j));
      matrix.push_back(std::move(row));
    }
    doc["distance_matrix"] = std::move(matrix);
  }
  return doc;
}

// Canonical serialization: sorted keys, two-space indent, trailing newline.
inline std::string SerializeScenario(const Scenario& s) {
  return ScenarioToJson(s).dump(2) + "\n";
}

// FNV-1a 64 of the canonical serialization, as 16 hex digits. Independent
// of the whitespace and key order of the document the scenario came from.
inline std::string ScenarioDigest(const Scenario& s) {
  const std::string bytes = ScenarioToJson(s).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open '", path, "' for reading");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline void WriteFile(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorKind::kIo, "cannot open '", path, "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) Fail(ErrorKind::kIo, "write to '", path, "' failed");
}

}  // namespace rmop

#endif  // RMOP_SCENARIO_IO_HPP_
