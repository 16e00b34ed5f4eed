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

#include <set>
#include <string>

#include "rmop/rmop.hpp"
#include "test_support.hpp"

namespace rmop {
namespace {

using ::rmop::testing::FourVertexScenario;

std::vector<Vertex> ThreeVertices() {
  return {{0, {0, 0}, 1, {}}, {1, {1, 0}, 1, {}}, {2, {2, 0}, 1, {}}};
}

template <typename F>
ErrorKind KindOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no rmop::Error thrown";
  return ErrorKind::kIo;
}

TEST(MetricGraphTest, EuclideanDistances) {
  MetricGraph g(ThreeVertices());
  EXPECT_DOUBLE_EQ(g.distance(0, 2), 2.0);
  EXPECT_DOUBLE_EQ(g.distance(2, 1), 1.0);
  EXPECT_DOUBLE_EQ(g.distance(1, 1), 0.0);
  EXPECT_TRUE(VerifyMetric(g).clean());
}

TEST(MetricGraphTest, TriangleViolationNamesIndices) {
  MetricGraph g(ThreeVertices(), {{0, 1, 10}, {1, 0, 1}, {10, 1, 0}});
  const ValidationReport r = VerifyMetric(g);
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].kind, "triangle");
  EXPECT_EQ(r.issues[0].indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(r.issues[0].magnitude, 8.0);
}

TEST(MetricGraphTest, NonzeroDiagonalReported) {
  MetricGraph g(ThreeVertices(), {{0, 1, 2}, {1, 0.5, 1}, {2, 1, 0}});
  const ValidationReport r = VerifyMetric(g);
  ASSERT_FALSE(r.clean());
  EXPECT_EQ(r.issues[0].kind, "diagonal");
  EXPECT_EQ(r.issues[0].indices, (std::vector<std::size_t>{1}));
}

TEST(MetricGraphTest, AsymmetryReported) {
  MetricGraph g(ThreeVertices(), {{0, 1, 2}, {1.5, 0, 1}, {2, 1, 0}});
  const ValidationReport r = VerifyMetric(g);
  ASSERT_FALSE(r.clean());
  EXPECT_EQ(r.issues[0].kind, "symmetry");
  EXPECT_EQ(r.issues[0].indices, (std::vector<std::size_t>{0, 1}));
}

TEST(MetricGraphTest, RejectsBadInput) {
  EXPECT_EQ(KindOf([] { MetricGraph({{0, {0, 0}, -1, {}}}); }), ErrorKind::kInvariant);
  EXPECT_EQ(KindOf([] { MetricGraph({{1, {0, 0}, 1, {}}}); }), ErrorKind::kInvariant);
  EXPECT_EQ(KindOf([] { MetricGraph(ThreeVertices(), {{0, 1}, {1, 0}}); }),
            ErrorKind::kInvariant);
  EXPECT_EQ(KindOf([] { MetricGraph(ThreeVertices(), {{0, -1, 2}, {1, 0, 1}, {2, 1, 0}}); }),
            ErrorKind::kInvariant);
}

TEST(ScenarioTest, ValidateRejectsAlphaAtLeastN) {
  Scenario s = FourVertexScenario(2, 2);
  try {
    ValidateScenario(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvariant);
    EXPECT_NE(std::string(e.what()).find("alpha=2, N=2"), std::string::npos);
  }
  s.alpha = 1;
  EXPECT_NO_THROW(ValidateScenario(s));
  s.starts[1] = 9;
  EXPECT_EQ(KindOf([&] { ValidateScenario(s); }), ErrorKind::kInvariant);
}

TEST(PathTest, CostAndRepeats) {
  MetricGraph g(ThreeVertices());
  EXPECT_DOUBLE_EQ(PathCost(g, std::vector<VertexId>{0, 2, 1}), 3.0);
  EXPECT_DOUBLE_EQ(PathCost(g, std::vector<VertexId>{1}), 0.0);
  EXPECT_THROW(PathCost(g, std::vector<VertexId>{0, 1, 0}), Error);
  EXPECT_THROW(PathCost(g, std::vector<VertexId>{0, 7}), Error);
}

TEST(GenerateTest, DeterministicAndInRange) {
  GenerationParams p;
  p.seed = 42;
  const Scenario a = GenerateScenario(p);
  const Scenario b = GenerateScenario(p);
  EXPECT_EQ(SerializeScenario(a), SerializeScenario(b));
  EXPECT_EQ(a.graph.size(), 96u);
  EXPECT_EQ(a.robots(), 10u);
  EXPECT_EQ(std::set<VertexId>(a.starts.begin(), a.starts.end()).size(), 10u);
  double peak = 0.0;
  for (const Vertex& v : a.graph.vertices()) {
    EXPECT_GE(v.base_reward, 0.0);
    EXPECT_LE(v.base_reward, 100.0);
    EXPECT_EQ(v.base_reward, std::round(v.base_reward));
    peak = std::max(peak, v.base_reward);
  }
  EXPECT_EQ(peak, 100.0);
  EXPECT_TRUE(VerifyMetric(a.graph).clean());

  p.seed = 43;
  EXPECT_NE(SerializeScenario(GenerateScenario(p)), SerializeScenario(a));
}

TEST(GenerateTest, CoverageBaseRewardIsCellSum) {
  GenerationParams p;
  p.n_vertices = 16;
  p.n_robots = 3;
  p.alpha = 1;
  p.reward_kind = RewardKind::kCoverage;
  p.layout = Layout::kUniformRandom;
  p.seed = 5;
  const Scenario s = GenerateScenario(p);
  for (const Vertex& v : s.graph.vertices()) {
    double sum = 0.0;
    for (const CoverageEntry& c : v.coverage) sum += c.weight;
    EXPECT_DOUBLE_EQ(v.base_reward, sum);
  }
}

TEST(GenerateTest, RejectsInvalidParameters) {
  GenerationParams p;
  p.alpha = 10;
  EXPECT_EQ(KindOf([&] { GenerateScenario(p); }), ErrorKind::kInvalidArgument);
  p.alpha = 1;
  p.budget = 0;
  EXPECT_EQ(KindOf([&] { GenerateScenario(p); }), ErrorKind::kInvalidArgument);
}

TEST(ScenarioIoTest, RoundTripIsByteStable) {
  GenerationParams p;
  p.n_vertices = 12;
  p.n_robots = 3;
  p.alpha = 1;
  p.reward_kind = RewardKind::kCoverage;
  p.seed = 9;
  const std::string text = SerializeScenario(GenerateScenario(p));
  const Scenario back = LoadScenario(text);
  EXPECT_EQ(SerializeScenario(back), text);
  EXPECT_EQ(ScenarioDigest(back), ScenarioDigest(GenerateScenario(p)));
  EXPECT_EQ(ScenarioDigest(back).size(), 16u);
}

TEST(ScenarioIoTest, ExplicitMatrixRoundTrip) {
  Scenario s;
  s.graph = MetricGraph(ThreeVertices(), {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  s.starts = {0, 2};
  s.budget = 3;
  s.alpha = 1;
  const std::string text = SerializeScenario(s);
  const Scenario back = LoadScenario(text);
  EXPECT_TRUE(back.graph.has_explicit_distances());
  EXPECT_EQ(SerializeScenario(back), text);
}

TEST(ScenarioIoTest, ParseErrors) {
  EXPECT_EQ(KindOf([] { ParseScenario("{not json"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseScenario(R"({"vertices": []})"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] {
              ParseScenario(R"({"vertices": [{"id":0,"x":0,"y":0,"reward":1}],
                 "starts":[0],"budget":1,"alpha":0,"reward_kind":"modular","extra":1})");
            }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] {
              ParseScenario(R"({"vertices": [{"id":0,"x":0,"y":0,"reward":1}],
                 "starts":[0],"budget":1,"alpha":0,"reward_kind":"cubic"})");
            }),
            ErrorKind::kParse);
}

TEST(ScenarioIoTest, LoadRejectsNonMetric) {
  const std::string doc = R"({"vertices": [{"id":0,"x":0,"y":0,"reward":1},
      {"id":1,"x":1,"y":0,"reward":1}, {"id":2,"x":2,"y":0,"reward":1}],
      "distance_matrix": [[0,1,10],[1,0,1],[10,1,0]],
      "starts":[0],"budget":1,"alpha":0,"reward_kind":"modular"})";
  EXPECT_NO_THROW(ParseScenario(doc));
  try {
    LoadScenario(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvariant);
    EXPECT_NE(std::string(e.what()).find("d(0,2)"), std::string::npos);
  }
}

TEST(RngTest, SampleIsSortedDistinctAndSeeded) {
  Rng a(7), b(7);
  const auto s = a.Sample(10, 4);
  EXPECT_EQ(s, b.Sample(10, 4));
  ASSERT_EQ(s.size(), 4u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), 4u);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(a.Below(3), 3u);
  }
}

}  // namespace
}  // namespace rmop
