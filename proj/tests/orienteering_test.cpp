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

#include <cmath>
#include <vector>

#include "rmop/rmop.hpp"
#include "test_support.hpp"

namespace rmop {
namespace {

using ::rmop::testing::FourVertexScenario;
using ::rmop::testing::RandomTinyScenario;
using ::rmop::testing::TinyInstanceOptions;
namespace oracle = ::rmop::testing::oracle;

using Ids = std::vector<VertexId>;

TEST(ExactOpTest, FourVertexInstance) {
  const Scenario s = FourVertexScenario();
  const RewardModel m = RewardModel::FromScenario(s);
  const Path p = SolveOpExact(s.graph, m, 0, 2.0);
  EXPECT_EQ(p.vertices, (Ids{0, 1, 2}));
  EXPECT_DOUBLE_EQ(p.cost, 2.0);
  EXPECT_EQ(m.Evaluate(p.vertices), 8.0);
}

TEST(ExactOpTest, MaskedVerticesAreWorthless) {
  const Scenario s = FourVertexScenario();
  const RewardModel m = RewardModel::FromScenario(s).Masked(Ids{0, 1, 2});
  EXPECT_EQ(SolveOpExact(s.graph, m, 0, 2.0).vertices, (Ids{0, 3}));
}

TEST(ExactOpTest, TinyBudgetKeepsStartOnly) {
  const Scenario s = FourVertexScenario();
  const RewardModel m = RewardModel::FromScenario(s);
  EXPECT_EQ(SolveOpExact(s.graph, m, 0, 0.5).vertices, (Ids{0}));
  EXPECT_EQ(SolveOpGcb(s.graph, m, 0, 0.5).vertices, (Ids{0}));
}

TEST(ExactOpTest, TiesGoToLexicographicallySmallest) {
  MetricGraph g({{0, {0, 0}, 0, {}}, {1, {1, 0}, 5, {}}, {2, {-1, 0}, 5, {}}});
  const RewardModel m = RewardModel::Modular({0, 5, 5});
  EXPECT_EQ(SolveOpExact(g, m, 0, 1.0).vertices, (Ids{0, 1}));
}

TEST(ExactOpTest, GuardAboveFourteenVertices) {
  GenerationParams p;
  p.n_vertices = 15;
  p.n_robots = 1;
  p.alpha = 0;
  const Scenario s = GenerateScenario(p);
  try {
    SolveOpExact(s.graph, RewardModel::FromScenario(s), 0, 10.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGuard);
    EXPECT_NE(std::string(e.what()).find("gcb"), std::string::npos);
  }
}

TEST(ExactOpTest, MatchesPathEnumerationOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    TinyInstanceOptions o;
    o.coverage = seed % 2 == 1;
    o.max_vertices = 7;
    const Scenario s = RandomTinyScenario(seed, o);
    const RewardModel m = RewardModel::FromScenario(s);
    const Path p = SolveOpExact(s.graph, m, s.starts[0], s.budget);
    EXPECT_EQ(p.vertices.front(), s.starts[0]);
    EXPECT_LE(p.cost, s.budget + 1e-9);
    EXPECT_NEAR(m.Evaluate(p.vertices), oracle::BestSingleRobot(s, s.starts[0], s.budget), 1e-9)
        << "seed " << seed;
  }
}

TEST(GcbTest, FourVertexTrace) {
  const Scenario s = FourVertexScenario();
  const RewardModel m = RewardModel::FromScenario(s);
  const Path p = SolveOpGcb(s.graph, m, 0, 2.0);
  EXPECT_EQ(p.vertices, (Ids{0, 1, 2}));
  EXPECT_DOUBLE_EQ(p.cost, 2.0);
}

TEST(GcbTest, SingletonBeatsGreedyRoute) {
  // Three cheap unit rewards lure the ratio rule; the far vertex alone is
  // worth 50 and exactly fits the budget.
  MetricGraph g({{0, {0, 0}, 0, {}},
                 {1, {0.1, 0}, 1, {}},
                 {2, {0, -10}, 50, {}},
                 {3, {-0.1, 0}, 1, {}},
                 {4, {0, 0.1}, 1, {}}});
  const RewardModel m = RewardModel::Modular({0, 1, 50, 1, 1});
  const Path p = SolveOpGcb(g, m, 0, 10.0);
  EXPECT_EQ(p.vertices, (Ids{0, 2}));
  EXPECT_EQ(SolveOpExact(g, m, 0, 10.0).vertices, (Ids{0, 2}));
}

TEST(GcbTest, FeasibleAndNoBetterThanExact) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    TinyInstanceOptions o;
    o.coverage = seed % 2 == 1;
    o.max_vertices = 8;
    const Scenario s = RandomTinyScenario(seed, o);
    const RewardModel m = RewardModel::FromScenario(s);
    const Path gcb = SolveOpGcb(s.graph, m, s.starts[0], s.budget);
    EXPECT_EQ(gcb.vertices.front(), s.starts[0]);
    EXPECT_LE(gcb.cost, s.budget + 1e-9);
    EXPECT_NEAR(gcb.cost, PathCost(s.graph, gcb.vertices), 1e-12);
    const Path exact = SolveOpExact(s.graph, m, s.starts[0], s.budget);
    EXPECT_LE(m.Evaluate(gcb.vertices), m.Evaluate(exact.vertices) + 1e-9);
  }
}

TEST(GcbTest, ScalesToLargeGraphs) {
  GenerationParams p;
  p.seed = 3;
  const Scenario s = GenerateScenario(p);
  const RewardModel m = RewardModel::FromScenario(s);
  const Path path = SolveOpGcb(s.graph, m, s.starts[0], s.budget);
  EXPECT_LE(path.cost, s.budget + 1e-9);
  EXPECT_GT(m.Evaluate(path.vertices), 0.0);
}

TEST(CheapestInsertionTest, LineOrdering) {
  const Scenario s = FourVertexScenario();
  const RouteEstimate r = CheapestInsertion(s.graph, 0, Ids{2, 1});
  EXPECT_EQ(r.ordering, (Ids{0, 1, 2}));
  EXPECT_DOUBLE_EQ(r.cost, 2.0);
  const RouteEstimate all = CheapestInsertion(s.graph, 0, Ids{3, 2, 1, 0});
  EXPECT_EQ(all.ordering.front(), 0u);
  EXPECT_EQ(all.ordering.size(), 4u);
  EXPECT_DOUBLE_EQ(all.cost, PathCost(s.graph, all.ordering));
}

TEST(OpSolverConfigTest, EtaValues) {
  EXPECT_EQ(OpSolverConfig::Exact().eta, 1.0);
  EXPECT_NEAR(OpSolverConfig::Gcb().eta, 2.0 / (1.0 - std::exp(-1.0)), 1e-12);
  EXPECT_EQ(ParseOpMethod("exact"), OpMethod::kExact);
  EXPECT_EQ(ParseOpMethod("gcb"), OpMethod::kGcb);
  EXPECT_THROW(ParseOpMethod("blum"), Error);
}

}  // namespace
}  // namespace rmop
