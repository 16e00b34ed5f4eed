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

// Metric-graph scenarios: vertices with rewards, a metric distance matrix,
// robot start vertices, the per-robot budget and the attack size.

#ifndef RMOP_GRAPH_HPP_
#define RMOP_GRAPH_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmop/common.hpp"

namespace rmop {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct CoverageEntry {
  std::size_t cell = 0;
  double weight = 0.0;
};

struct Vertex {
  VertexId id = 0;
  Point position;
  double base_reward = 0.0;
  std::vector<CoverageEntry> coverage;
};

inline double EuclideanDistance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Vertices plus a dense |V|x|V| distance matrix. The matrix is derived from
// positions unless given explicitly. Structural invariants (dense ids,
// non-negative rewards, square non-negative matrix, consistent cell weights)
// are enforced on construction; metric properties are checked separately by
// VerifyMetric so that non-metric inputs can still be inspected.
class MetricGraph {
 public:
  MetricGraph() = default;

  explicit MetricGraph(std::vector<Vertex> vertices)
      : vertices_(std::move(vertices)) {
    CheckVertices();
    const std::size_t n = vertices_.size();
    distances_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        distances_[i * n + j] =
            i == j ? 0.0
                   : EuclideanDistance(vertices_[i].position,
                                       vertices_[j].position);
      }
    }
  }

  MetricGraph(std::vector<Vertex> vertices,
              const std::vector<std::vector<double>>& matrix)
      : vertices_(std::move(vertices)), explicit_(true) {
    CheckVertices();
    const std::size_t n = vertices_.size();
    if (matrix.size() != n) {
      Fail(ErrorKind::kInvariant, "distance_matrix has ", matrix.size(),
           " rows, expected ", n);
    }
    distances_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix[i].size() != n) {
        Fail(ErrorKind::kInvariant, "distance_matrix row ", i, " has ",
             matrix[i].size(), " entries, expected ", n);
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double d = matrix[i][j];
        if (!std::isfinite(d) || d < 0.0) {
          Fail(ErrorKind::kInvariant, "distance_matrix entry (", i, ",", j,
               ") must be a finite non-negative number");
        }
        distances_[i * n + j] = d;
      }
    }
  }

  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool has_explicit_distances() const { return explicit_; }
  bool contains(VertexId v) const { return v < vertices_.size(); }

  double distance(VertexId a, VertexId b) const {
    return distances_[a * vertices_.size() + b];
  }

  // Cell weights for coverage rewards, indexed by cell id. Cells that no
  // vertex mentions have weight 0.
  std::vector<double> CellWeights() const {
    std::vector<double> weights;
    for (const Vertex& v : vertices_) {
      for (const CoverageEntry& c : v.coverage) {
        if (c.cell >= weights.size()) weights.resize(c.cell + 1, 0.0);
        weights[c.cell] = c.weight;
      }
    }
    return weights;
  }

 private:
  void CheckVertices() const {
    std::map<std::size_t, double> cell_weight;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vertex& v = vertices_[i];
      if (v.id != i) {
        Fail(ErrorKind::kInvariant, "vertex at index ", i, " has id ", v.id,
             "; ids must be dense 0..|V|-1 in order");
      }
      if (!std::isfinite(v.position.x) || !std::isfinite(v.position.y)) {
        Fail(ErrorKind::kInvariant, "vertex ", i, " has a non-finite position");
      }
      if (!std::isfinite(v.base_reward) || v.base_reward < 0.0) {
        Fail(ErrorKind::kInvariant, "vertex ", i,
             " has a negative or non-finite reward");
      }
      for (const CoverageEntry& c : v.coverage) {
        if (!std::isfinite(c.weight) || c.weight < 0.0) {
          Fail(ErrorKind::kInvariant, "vertex ", i, " cell ", c.cell,
               " has a negative or non-finite weight");
        }
        auto [it, inserted] = cell_weight.emplace(c.cell, c.weight);
        if (!inserted && it->second != c.weight) {
          Fail(ErrorKind::kInvariant, "cell ", c.cell,
               " is given inconsistent weights (vertex ", i, ")");
        }
      }
    }
  }

  std::vector<Vertex> vertices_;
  std::vector<double> distances_;
  bool explicit_ = false;
};

enum class RewardKind { kModular, kCoverage };

inline const char* ToString(RewardKind kind) {
  return kind == RewardKind::kModular ? "modular" : "coverage";
}

struct Scenario {
  MetricGraph graph;
  std::vector<VertexId> starts;
  double budget = 0.0;
  std::size_t alpha = 0;
  RewardKind reward_kind = RewardKind::kModular;

  std::size_t robots() const { return starts.size(); }
};

// Checks the scenario-level invariants. Metric properties are not checked.
inline void ValidateScenario(const Scenario& s) {
  if (s.starts.empty()) Fail(ErrorKind::kInvariant, "at least one robot start is required");
  for (std::size_t r = 0; r < s.starts.size(); ++r) {
    if (!s.graph.contains(s.starts[r])) {
      Fail(ErrorKind::kInvariant, "start of robot ", r, " is vertex ",
           s.starts[r], ", which does not exist");
    }
  }
  if (!(s.budget > 0.0) || !std::isfinite(s.budget)) {
    Fail(ErrorKind::kInvariant, "budget must be a positive finite number");
  }
  if (s.alpha >= s.starts.size()) {
    Fail(ErrorKind::kInvariant, "alpha must be < N (alpha=", s.alpha,
         ", N=", s.starts.size(), ")");
  }
}

struct Path {
  RobotId robot = 0;
  std::vector<VertexId> vertices;
  double cost = 0.0;
};

inline bool operator==(const Path& a, const Path& b) {
  return a.robot == b.robot && a.vertices == b.vertices && a.cost == b.cost;
}

// Sum of distances over consecutive pairs. Throws on an invalid or repeated
// id.
inline double PathCost(const MetricGraph& graph,
                       std::span<const VertexId> vertices) {
  std::vector<char> seen(graph.size(), 0);
  double cost = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const VertexId v = vertices[i];
    if (!graph.contains(v)) {
      Fail(ErrorKind::kInvalidArgument, "path vertex ", v, " does not exist");
    }
    if (seen[v]) {
      Fail(ErrorKind::kInvalidArgument, "path repeats vertex ", v);
    }
    seen[v] = 1;
    if (i > 0) cost += graph.distance(vertices[i - 1], v);
  }
  return cost;
}

inline Path MakePath(const MetricGraph& graph, RobotId robot,
                     std::vector<VertexId> vertices) {
  const double cost = PathCost(graph, vertices);
  return Path{robot, std::move(vertices), cost};
}

// Lists diagonal, negativity, symmetry and triangle violations. An empty
// report means the matrix is a metric within kTolerance.
inline ValidationReport VerifyMetric(const MetricGraph& graph) {
  ValidationReport report;
  const std::size_t n = graph.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = graph.distance(i, i);
    if (std::abs(d) > kTolerance) {
      report.Add("diagonal", {i}, d,
                 detail::Concat("d(", i, ",", i, ") = ", d, " must be 0"));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(graph.distance(i, j) - graph.distance(j, i));
      if (gap > kTolerance) {
        report.Add("symmetry", {i, j}, gap,
                   detail::Concat("d(", i, ",", j, ") != d(", j, ",", i, ")"));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const double direct = graph.distance(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const double via = graph.distance(i, j) + graph.distance(j, k);
        if (direct > via + kTolerance) {
          report.Add("triangle", {i, j, k}, direct - via,
                     detail::Concat("d(", i, ",", k, ") = ", direct,
                                    " exceeds d(", i, ",", j, ") + d(", j,
                                    ",", k, ") = ", via));
        }
      }
    }
  }
  return report;
}

// Draws `n_robots` start vertices for a trial, distinct when possible.
inline std::vector<VertexId> SampleStarts(std::size_t n_vertices,
                                          std::size_t n_robots,
                                          std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> starts;
  if (n_robots <= n_vertices) {
    std::vector<std::size_t> pool(n_vertices);
    for (std::size_t i = 0; i < n_vertices; ++i) pool[i] = i;
    for (std::size_t r = 0; r < n_robots; ++r) {
      std::size_t j = r + static_cast<std::size_t>(rng.Below(n_vertices - r));
      std::swap(pool[r], pool[j]);
      starts.push_back(pool[r]);
    }
  } else {
    for (std::size_t r = 0; r < n_robots; ++r) {
      starts.push_back(static_cast<VertexId>(rng.Below(n_vertices)));
    }
  }
  return starts;
}

// Scenario generation.

enum class Layout { kGrid, kUniformRandom };

inline const char* ToString(Layout layout) {
  return layout == Layout::kGrid ? "grid" : "uniform-random";
}

struct GaussianBump {
  Point center;
  double sigma = 1.0;
  double weight = 1.0;
};

// Importance map: a weighted sum of isotropic Gaussian bumps. When `bumps`
// is empty, `random_bumps` bumps are drawn from the seed with sigma between
// the given fractions of the area side.
struct ImportanceField {
  std::size_t random_bumps = 3;
  double min_sigma_fraction = 0.08;
  double max_sigma_fraction = 0.2;
  std::vector<GaussianBump> bumps;

  double Evaluate(const Point& p, const std::vector<GaussianBump>& b) const {
    double value = 0.0;
    for (const GaussianBump& bump : b) {
      const double dx = p.x - bump.center.x;
      const double dy = p.y - bump.center.y;
      value += bump.weight *
               std::exp(-(dx * dx + dy * dy) / (2.0 * bump.sigma * bump.sigma));
    }
    return value;
  }
};

struct GenerationParams {
  std::size_t n_vertices = 96;
  std::size_t n_robots = 10;
  std::size_t alpha = 3;
  double budget = 60.0;
  Layout layout = Layout::kGrid;
  ImportanceField importance;
  RewardKind reward_kind = RewardKind::kModular;
  // Spacing between neighbouring grid vertices; the area side grows with
  // sqrt(n_vertices) so that vertex density stays fixed.
  double spacing = 10.0;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<double> ScaleToPercent(const std::vector<double>& raw) {
  double peak = 0.0;
  for (double v : raw) peak = std::max(peak, v);
  std::vector<double> scaled(raw.size(), 0.0);
  if (peak <= 0.0) return scaled;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    scaled[i] = std::round(100.0 * raw[i] / peak);
  }
  return scaled;
}

}  // namespace detail

// Deterministic in (params, seed). Rewards are integers in [0, 100].
inline Scenario GenerateScenario(const GenerationParams& p) {
  if (p.n_vertices < 1) Fail(ErrorKind::kInvalidArgument, "n_vertices must be >= 1");
  if (p.n_robots < 1) Fail(ErrorKind::kInvalidArgument, "n_robots must be >= 1");
  if (p.alpha >= p.n_robots) {
    Fail(ErrorKind::kInvalidArgument, "alpha must be < N (alpha=", p.alpha,
         ", N=", p.n_robots, ")");
  }
  if (!(p.budget > 0.0) || !std::isfinite(p.budget)) {
    Fail(ErrorKind::kInvalidArgument, "budget must be a positive finite number");
  }
  if (!(p.spacing > 0.0)) Fail(ErrorKind::kInvalidArgument, "spacing must be positive");
  const auto& f = p.importance;
  if (f.bumps.empty() &&
      (f.random_bumps == 0 || !(f.min_sigma_fraction > 0.0) ||
       f.max_sigma_fraction < f.min_sigma_fraction)) {
    Fail(ErrorKind::kInvalidArgument, "importance field needs at least one bump "
         "and 0 < min_sigma_fraction <= max_sigma_fraction");
  }

  Rng rng(p.seed);
  const std::size_t n = p.n_vertices;
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t rows = (n + cols - 1) / cols;
  const double width = p.spacing * static_cast<double>(cols);
  const double height = p.spacing * static_cast<double>(rows);

  std::vector<Point> positions(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.layout == Layout::kGrid) {
      positions[i] = {p.spacing * (0.5 + static_cast<double>(i % cols)),
                      p.spacing * (0.5 + static_cast<double>(i / cols))};
    } else {
      const double x = rng.Uniform(0.0, width);
      const double y = rng.Uniform(0.0, height);
      positions[i] = {x, y};
    }
  }

  std::vector<GaussianBump> bumps = f.bumps;
  if (bumps.empty()) {
    const double side = std::max(width, height);
    for (std::size_t b = 0; b < f.random_bumps; ++b) {
      GaussianBump bump;
      bump.center.x = rng.Uniform(0.0, width);
      bump.center.y = rng.Uniform(0.0, height);
      bump.sigma = side * rng.Uniform(f.min_sigma_fraction, f.max_sigma_fraction);
      bump.weight = rng.Uniform(0.5, 1.0);
      bumps.push_back(bump);
    }
  }

  std::vector<Vertex> vertices(n);
  if (p.reward_kind == RewardKind::kModular) {
    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = f.Evaluate(positions[i], bumps);
    const std::vector<double> rewards = detail::ScaleToPercent(raw);
    for (std::size_t i = 0; i < n; ++i) {
      vertices[i] = Vertex{i, positions[i], rewards[i], {}};
    }
  } else {
    // Cells on a grid twice as fine as the vertex spacing; a vertex senses
    // every cell within 1.5 spacings.
    const double cell_size = p.spacing / 2.0;
    const auto cell_cols = static_cast<std::size_t>(std::ceil(width / cell_size));
    const auto cell_rows = static_cast<std::size_t>(std::ceil(height / cell_size));
    std::vector<Point> cells;
    std::vector<double> raw;
    for (std::size_t r = 0; r < cell_rows; ++r) {
      for (std::size_t c = 0; c < cell_cols; ++c) {
        Point centre{cell_size * (0.5 + static_cast<double>(c)),
                     cell_size * (0.5 + static_cast<double>(r))};
        cells.push_back(centre);
        raw.push_back(f.Evaluate(centre, bumps));
      }
    }
    const std::vector<double> cell_weights = detail::ScaleToPercent(raw);
    const double radius = 1.5 * p.spacing;
    for (std::size_t i = 0; i < n; ++i) {
      Vertex v{i, positions[i], 0.0, {}};
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (EuclideanDistance(positions[i], cells[c]) <= radius) {
          v.coverage.push_back({c, cell_weights[c]});
          v.base_reward += cell_weights[c];
        }
      }
      vertices[i] = std::move(v);
    }
  }

  Scenario s;
  s.graph = MetricGraph(std::move(vertices));
  s.starts = SampleStarts(n, p.n_robots, rng.Next());
  s.budget = p.budget;
  s.alpha = p.alpha;
  s.reward_kind = p.reward_kind;
  return s;
}

}  // namespace rmop

#endif  // RMOP_GRAPH_HPP_
