// Copyright 2026 The StressKit Authors
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

#include "stresskit/classifier/label_propagation.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stresskit/classifier/neighbors.h"
#include "stresskit/error.h"

namespace stresskit::classifier {
namespace {

struct WeightedEdge {
  std::size_t target;
  double weight;
};

using Graph = std::vector<std::vector<WeightedEdge>>;

// Row-normalized affinities for the given query rows against `points`. When
// every RBF weight underflows the neighbors are weighted uniformly.
Graph Affinities(const Matrix& query, const Matrix& points, LpaKernel kernel, int n_neighbors,
                 double gamma, bool query_is_points) {
  Graph graph(static_cast<std::size_t>(query.rows()));
  if (kernel == LpaKernel::kKnnRbf) {
    const auto neighbors = NearestNeighbors(query, points,
                                            static_cast<std::size_t>(n_neighbors),
                                            query_is_points);
    for (std::size_t q = 0; q < neighbors.size(); ++q) {
      for (const auto& nb : neighbors[q]) {
        graph[q].push_back({nb.index, std::exp(-gamma * nb.sq_dist)});
      }
    }
  } else {
    for (Eigen::Index begin = 0; begin < query.rows(); begin += 256) {
      const Eigen::Index rows = std::min<Eigen::Index>(256, query.rows() - begin);
      const Matrix d = SquaredDistances(query.middleRows(begin, rows), points);
      for (Eigen::Index r = 0; r < rows; ++r) {
        const auto q = static_cast<std::size_t>(begin + r);
        for (Eigen::Index j = 0; j < points.rows(); ++j) {
          if (query_is_points && static_cast<std::size_t>(j) == q) continue;
          graph[q].push_back({static_cast<std::size_t>(j), std::exp(-gamma * d(r, j))});
        }
      }
    }
  }
  for (auto& edges : graph) {
    double total = 0.0;
    for (const auto& e : edges) total += e.weight;
    for (auto& e : edges) {
      e.weight = total > 0.0 ? e.weight / total : 1.0 / static_cast<double>(edges.size());
    }
  }
  return graph;
}

}  // namespace

Vector LpaModel::Score(const Matrix& x) const {
  Vector score = Vector::Constant(x.rows(), 0.5);
  if (points.rows() == 0) return score;
  const Graph graph = Affinities(x, points, kernel, n_neighbors, gamma, false);
  for (std::size_t q = 0; q < graph.size(); ++q) {
    double s = 0.0;
    for (const auto& e : graph[q]) s += e.weight * positive_prob[static_cast<Eigen::Index>(e.target)];
    // Normalized weights can sum to 1 + ulp.
    score[static_cast<Eigen::Index>(q)] = std::clamp(s, 0.0, 1.0);
  }
  return score;
}

LpaModel TrainLabelPropagation(const Matrix& x, const Labels& y, const LpaConfig& cfg) {
  if (cfg.n_neighbors < 1 || cfg.max_iter < 1 || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "label propagation needs n_neighbors, max_iter, tol > 0");
  }
  const auto n = static_cast<std::size_t>(x.rows());
  if (y.size() != n) throw Error(ErrorCode::kLengthMismatch, "rows and labels differ");
  if (n < static_cast<std::size_t>(cfg.n_neighbors) + 1) {
    throw Error(ErrorCode::kUnderdetermined,
                "label propagation needs more than " + std::to_string(cfg.n_neighbors) +
                    " samples, got " + std::to_string(n));
  }
  bool seen[2] = {false, false};
  std::vector<std::size_t> unlabeled;
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] == -1) {
      unlabeled.push_back(i);
    } else if (y[i] == 0 || y[i] == 1) {
      seen[y[i]] = true;
    } else {
      throw Error(ErrorCode::kSchemaError, "labels must be 0, 1 or -1 (unlabeled)");
    }
  }
  if (!seen[0] || !seen[1]) {
    throw Error(ErrorCode::kSingleClass, "label propagation needs both classes labeled");
  }

  LpaModel model;
  model.kernel = cfg.kernel;
  model.n_neighbors = cfg.n_neighbors;
  model.gamma = cfg.gamma > 0.0 ? cfg.gamma : ScaleGamma(x);
  model.points = x;
  model.positive_prob.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    model.positive_prob[static_cast<Eigen::Index>(i)] = y[i] == 1 ? 1.0 : 0.0;
  }
  if (unlabeled.empty()) return model;

  // Labeled rows are clamped, so only the unlabeled rows' edges are needed.
  Matrix query(static_cast<Eigen::Index>(unlabeled.size()), x.cols());
  for (std::size_t u = 0; u < unlabeled.size(); ++u) {
    query.row(static_cast<Eigen::Index>(u)) = x.row(static_cast<Eigen::Index>(unlabeled[u]));
  }
  Graph graph = Affinities(query, x, cfg.kernel, cfg.n_neighbors + 1, model.gamma, false);
  // Query row u is training row unlabeled[u]: drop the self loop, keep the
  // k nearest others and renormalize.
  for (std::size_t u = 0; u < unlabeled.size(); ++u) {
    auto& edges = graph[u];
    std::erase_if(edges, [&](const WeightedEdge& e) { return e.target == unlabeled[u]; });
    if (cfg.kernel == LpaKernel::kKnnRbf && edges.size() > static_cast<std::size_t>(cfg.n_neighbors)) {
      edges.resize(static_cast<std::size_t>(cfg.n_neighbors));
    }
    double total = 0.0;
    for (const auto& e : edges) total += e.weight;
    for (auto& e : edges) e.weight = total > 0.0 ? e.weight / total : 1.0 / static_cast<double>(edges.size());
  }

  Vector& prob = model.positive_prob;
  for (std::size_t u : unlabeled) prob[static_cast<Eigen::Index>(u)] = 0.5;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    model.iterations = iter;
    Vector next = prob;
    double change = 0.0;
    for (std::size_t u = 0; u < unlabeled.size(); ++u) {
      double s = 0.0;
      for (const auto& e : graph[u]) s += e.weight * prob[static_cast<Eigen::Index>(e.target)];
      const auto row = static_cast<Eigen::Index>(unlabeled[u]);
      change += std::abs(s - prob[row]);
      next[row] = s;
    }
    prob = std::move(next);
    if (change < cfg.tol) break;
  }
  return model;
}

}  // namespace stresskit::classifier
