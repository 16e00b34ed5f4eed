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

// Single-path reward g over vertex sets, the induced team reward
// f(S) = g(union of the paths in S), marginal gains and curvature.

#ifndef RMOP_REWARD_HPP_
#define RMOP_REWARD_HPP_

#include <algorithm>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "rmop/graph.hpp"

namespace rmop {

class RewardAccumulator;

// Immutable reward model. Masked vertices contribute exactly zero; a masked
// variant shares the underlying weights with its parent. In coverage models
// masking a vertex also zeroes every cell it senses, so a model masked by X
// evaluates the conditional gain g(X + P) - g(X).
class RewardModel {
 public:
  RewardModel() : data_(std::make_shared<Data>()) {}

  static RewardModel Modular(std::vector<double> weights) {
    RewardModel m;
    auto data = std::make_shared<Data>();
    data->kind = RewardKind::kModular;
    data->weights = std::move(weights);
    for (double w : data->weights) {
      if (!(w >= 0.0)) Fail(ErrorKind::kInvariant, "modular weights must be >= 0");
    }
    m.mask_.assign(data->weights.size(), 0);
    m.data_ = std::move(data);
    return m;
  }

  // `covers[v]` lists the cells sensed from vertex v.
  static RewardModel Coverage(std::vector<std::vector<std::size_t>> covers,
                              std::vector<double> cell_weights) {
    RewardModel m;
    auto data = std::make_shared<Data>();
    data->kind = RewardKind::kCoverage;
    for (double w : cell_weights) {
      if (!(w >= 0.0)) Fail(ErrorKind::kInvariant, "cell weights must be >= 0");
    }
    for (auto& cells : covers) {
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      for (std::size_t c : cells) {
        if (c >= cell_weights.size()) {
          Fail(ErrorKind::kInvariant, "cell ", c, " has no weight");
        }
      }
    }
    data->covers = std::move(covers);
    data->cell_weights = std::move(cell_weights);
    m.mask_.assign(data->covers.size(), 0);
    m.cell_mask_.assign(data->cell_weights.size(), 0);
    m.data_ = std::move(data);
    return m;
  }

  static RewardModel FromGraph(const MetricGraph& graph, RewardKind kind) {
    if (kind == RewardKind::kModular) {
      std::vector<double> weights;
      for (const Vertex& v : graph.vertices()) weights.push_back(v.base_reward);
      return Modular(std::move(weights));
    }
    std::vector<std::vector<std::size_t>> covers;
    for (const Vertex& v : graph.vertices()) {
      std::vector<std::size_t> cells;
      for (const CoverageEntry& c : v.coverage) cells.push_back(c.cell);
      covers.push_back(std::move(cells));
    }
    return Coverage(std::move(covers), graph.CellWeights());
  }

  static RewardModel FromScenario(const Scenario& s) {
    return FromGraph(s.graph, s.reward_kind);
  }

  RewardKind kind() const { return data_->kind; }
  std::size_t size() const { return mask_.size(); }
  bool contains(VertexId v) const { return v < mask_.size(); }
  bool is_masked(VertexId v) const { return mask_[v] != 0; }

  std::size_t masked_count() const {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
  }

  // A copy of this model with `vertices` additionally masked.
  RewardModel Masked(std::span<const VertexId> vertices) const {
    RewardModel m = *this;
    for (VertexId v : vertices) {
      CheckId(v);
      m.mask_[v] = 1;
      if (kind() == RewardKind::kCoverage) {
        for (std::size_t c : data_->covers[v]) m.cell_mask_[c] = 1;
      }
    }
    return m;
  }

  RewardModel Unmasked() const {
    RewardModel m = *this;
    std::fill(m.mask_.begin(), m.mask_.end(), 0);
    std::fill(m.cell_mask_.begin(), m.cell_mask_.end(), 0);
    return m;
  }

  // g(set). Duplicate ids count once.
  double Evaluate(std::span<const VertexId> vertices) const;

  // g({v}).
  double Singleton(VertexId v) const {
    CheckId(v);
    if (is_masked(v)) return 0.0;
    if (kind() == RewardKind::kModular) return data_->weights[v];
    double total = 0.0;
    for (std::size_t c : data_->covers[v]) total += CellValue(c);
    return total;
  }

  // Weight of cell c, or 0 when it is masked.
  double CellValue(std::size_t c) const {
    return cell_mask_[c] ? 0.0 : data_->cell_weights[c];
  }

  void CheckId(VertexId v) const {
    if (!contains(v)) Fail(ErrorKind::kInvalidArgument, "vertex ", v, " does not exist");
  }

 private:
  friend class RewardAccumulator;

  struct Data {
    RewardKind kind = RewardKind::kModular;
    std::vector<double> weights;
    std::vector<std::vector<std::size_t>> covers;
    std::vector<double> cell_weights;
  };

  std::shared_ptr<const Data> data_;
  std::vector<char> mask_;
  std::vector<char> cell_mask_;
};

// Incrementally maintained g over a multiset of vertices. Supports removal,
// which the exhaustive solvers need for backtracking.
class RewardAccumulator {
 public:
  explicit RewardAccumulator(const RewardModel& model)
      : model_(&model),
        count_(model.size(), 0),
        cell_count_(model.data_->cell_weights.size(), 0) {}

  double value() const { return value_; }
  bool contains(VertexId v) const { return count_[v] > 0; }

  // g(current + {v}) - g(current).
  double Gain(VertexId v) const {
    if (count_[v] > 0 || model_->is_masked(v)) return 0.0;
    const auto& d = *model_->data_;
    if (d.kind == RewardKind::kModular) return d.weights[v];
    double gain = 0.0;
    for (std::size_t c : d.covers[v]) {
      if (cell_count_[c] == 0) gain += model_->CellValue(c);
    }
    return gain;
  }

  void Add(VertexId v) {
    model_->CheckId(v);
    if (count_[v]++ > 0 || model_->is_masked(v)) return;
    const auto& d = *model_->data_;
    if (d.kind == RewardKind::kModular) {
      value_ += d.weights[v];
      return;
    }
    for (std::size_t c : d.covers[v]) {
      if (cell_count_[c]++ == 0) value_ += model_->CellValue(c);
    }
  }

  void Remove(VertexId v) {
    if (count_[v] == 0) Fail(ErrorKind::kInvalidArgument, "vertex ", v, " not present");
    if (--count_[v] > 0 || model_->is_masked(v)) return;
    const auto& d = *model_->data_;
    if (d.kind == RewardKind::kModular) {
      value_ -= d.weights[v];
      return;
    }
    for (std::size_t c : d.covers[v]) {
      if (--cell_count_[c] == 0) value_ -= model_->CellValue(c);
    }
  }

 private:
  const RewardModel* model_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> cell_count_;
  double value_ = 0.0;
};

inline double RewardModel::Evaluate(std::span<const VertexId> vertices) const {
  // Summed from scratch rather than via an accumulator so that equal sets
  // give bit-identical values regardless of insertion order.
  std::vector<VertexId> ids(vertices.begin(), vertices.end());
  for (VertexId v : ids) CheckId(v);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  double total = 0.0;
  if (kind() == RewardKind::kModular) {
    for (VertexId v : ids) {
      if (!is_masked(v)) total += data_->weights[v];
    }
    return total;
  }
  std::vector<std::size_t> cells;
  for (VertexId v : ids) {
    if (is_masked(v)) continue;
    cells.insert(cells.end(), data_->covers[v].begin(), data_->covers[v].end());
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  for (std::size_t c : cells) total += CellValue(c);
  return total;
}

inline double EvalVertexSet(const RewardModel& model,
                            std::span<const VertexId> vertices) {
  return model.Evaluate(vertices);
}

// Union of the vertex sets of `paths`.
inline std::vector<VertexId> UnionOfPaths(std::span<const Path> paths) {
  std::vector<VertexId> all;
  for (const Path& p : paths) all.insert(all.end(), p.vertices.begin(), p.vertices.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

// f(paths) = g(union of path vertex sets); shared vertices count once.
inline double EvalTeam(const RewardModel& model, std::span<const Path> paths) {
  return model.Evaluate(UnionOfPaths(paths));
}

// f(base + addition) - f(base).
inline double Marginal(const RewardModel& model, std::span<const Path> base,
                       std::span<const Path> addition) {
  std::vector<Path> both(base.begin(), base.end());
  both.insert(both.end(), addition.begin(), addition.end());
  return std::max(0.0, EvalTeam(model, both) - EvalTeam(model, base));
}

struct CurvatureEstimate {
  double value = 0.0;
  std::size_t ground_set_size = 0;
  std::size_t skipped_zero_singletons = 0;
};

// k_h = 1 - min over v with h({v}) > 0 of (h(V) - h(V \ {v})) / h({v}).
// `h` maps a list of ground-set indices to a value. Elements with a zero
// singleton are skipped and counted; if all are zero the result is 0.
// Values within kTolerance of 0 are reported as exactly 0.
template <typename SetFunction>
CurvatureEstimate Curvature(std::size_t ground_set_size, SetFunction&& h) {
  CurvatureEstimate est;
  est.ground_set_size = ground_set_size;
  std::vector<std::size_t> all(ground_set_size);
  for (std::size_t i = 0; i < ground_set_size; ++i) all[i] = i;
  const double full = h(std::as_const(all));

  double min_ratio = 1.0;
  bool any = false;
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < ground_set_size; ++v) {
    const std::vector<std::size_t> single{v};
    const double alone = h(single);
    if (!(alone > 0.0)) {
      ++est.skipped_zero_singletons;
      continue;
    }
    rest.clear();
    for (std::size_t u = 0; u < ground_set_size; ++u) {
      if (u != v) rest.push_back(u);
    }
    const double ratio = (full - h(std::as_const(rest))) / alone;
    min_ratio = any ? std::min(min_ratio, ratio) : ratio;
    any = true;
  }
  if (any) est.value = std::clamp(1.0 - min_ratio, 0.0, 1.0);
  if (est.value <= kTolerance) est.value = 0.0;
  return est;
}

// k_g with `ground_set` as the ground set of vertices.
inline CurvatureEstimate VertexCurvature(const RewardModel& model,
                                         std::span<const VertexId> ground_set) {
  std::vector<VertexId> ids(ground_set.begin(), ground_set.end());
  return Curvature(ids.size(), [&](const std::vector<std::size_t>& idx) {
    std::vector<VertexId> subset;
    subset.reserve(idx.size());
    for (std::size_t i : idx) subset.push_back(ids[i]);
    return model.Evaluate(subset);
  });
}

// k_g over every vertex of the model.
inline CurvatureEstimate VertexCurvature(const RewardModel& model) {
  std::vector<VertexId> all(model.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return VertexCurvature(model, all);
}

// k_f with the given paths as the ground set.
inline CurvatureEstimate TeamCurvature(const RewardModel& model,
                                       std::span<const Path> paths) {
  std::vector<Path> ground(paths.begin(), paths.end());
  return Curvature(ground.size(), [&](const std::vector<std::size_t>& idx) {
    std::vector<Path> subset;
    subset.reserve(idx.size());
    for (std::size_t i : idx) subset.push_back(ground[i]);
    return EvalTeam(model, subset);
  });
}

}  // namespace rmop

#endif  // RMOP_REWARD_HPP_
