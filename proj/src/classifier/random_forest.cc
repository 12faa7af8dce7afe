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

#include "stresskit/classifier/random_forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "stresskit/error.h"

namespace stresskit::classifier {
namespace {

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double impurity = 0.0;  // weighted child Gini
};

double Gini(double positives, double total) {
  if (total <= 0.0) return 0.0;
  const double p = positives / total;
  return 2.0 * p * (1.0 - p);
}

class TreeBuilder {
 public:
  TreeBuilder(const Matrix& x, const Labels& y, const ForestConfig& cfg, std::mt19937_64& rng)
      : x_(x), y_(y), cfg_(cfg), rng_(rng) {
    const auto d = static_cast<int>(x.cols());
    mtry_ = cfg.max_features > 0
                ? std::min(cfg.max_features, d)
                : std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(d)))));
    features_.resize(static_cast<std::size_t>(d));
    std::iota(features_.begin(), features_.end(), 0);
  }

  DecisionTree Build(std::vector<std::size_t> samples) {
    DecisionTree tree;
    struct Pending {
      int node;
      std::vector<std::size_t> samples;
      int depth;
    };
    std::vector<Pending> stack;
    tree.nodes.emplace_back();
    stack.push_back({0, std::move(samples), 0});
    while (!stack.empty()) {
      Pending job = std::move(stack.back());
      stack.pop_back();
      double positives = 0.0;
      for (std::size_t s : job.samples) positives += y_[s];
      const auto total = static_cast<double>(job.samples.size());
      TreeNode& node = tree.nodes[static_cast<std::size_t>(job.node)];
      node.positive_fraction = total > 0.0 ? positives / total : 0.0;

      const bool pure = positives == 0.0 || positives == total;
      const bool depth_capped = cfg_.max_depth > 0 && job.depth >= cfg_.max_depth;
      if (pure || depth_capped || job.samples.size() < static_cast<std::size_t>(std::max(2, cfg_.min_samples_split))) {
        continue;
      }
      const Split split = FindSplit(job.samples, positives);
      if (split.feature < 0) continue;

      std::vector<std::size_t> left, right;
      for (std::size_t s : job.samples) {
        (x_(static_cast<Eigen::Index>(s), split.feature) <= split.threshold ? left : right).push_back(s);
      }
      const int left_id = static_cast<int>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes.emplace_back();
      TreeNode& parent = tree.nodes[static_cast<std::size_t>(job.node)];
      parent.feature = split.feature;
      parent.threshold = split.threshold;
      parent.left = left_id;
      parent.right = left_id + 1;
      stack.push_back({left_id + 1, std::move(right), job.depth + 1});
      stack.push_back({left_id, std::move(left), job.depth + 1});
    }
    return tree;
  }

 private:
  // Features are visited in random order until mtry of them have shown any
  // variation in this node, so a split is found whenever one exists.
  Split FindSplit(const std::vector<std::size_t>& samples, double positives) {
    const auto total = static_cast<double>(samples.size());
    Split best;
    best.impurity = Gini(positives, total);
    std::shuffle(features_.begin(), features_.end(), rng_);
    int examined = 0;
    std::vector<std::pair<double, int>> column(samples.size());
    for (int f : features_) {
      if (examined >= mtry_) break;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto s = static_cast<Eigen::Index>(samples[i]);
        column[i] = {x_(s, f), y_[samples[i]]};
      }
      std::sort(column.begin(), column.end());
      if (column.front().first == column.back().first) continue;
      ++examined;
      double left_pos = 0.0;
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        left_pos += column[i].second;
        if (column[i].first == column[i + 1].first) continue;
        const auto n_left = static_cast<double>(i + 1);
        const double n_right = total - n_left;
        const double impurity = (n_left * Gini(left_pos, n_left) +
                                 n_right * Gini(positives - left_pos, n_right)) /
                                total;
        if (impurity < best.impurity) {
          best.impurity = impurity;
          best.feature = f;
          best.threshold = 0.5 * (column[i].first + column[i + 1].first);
          // Midpoint can round onto the upper value for adjacent doubles.
          if (best.threshold >= column[i + 1].first) best.threshold = column[i].first;
        }
      }
    }
    return best;
  }

  const Matrix& x_;
  const Labels& y_;
  const ForestConfig& cfg_;
  std::mt19937_64& rng_;
  int mtry_ = 1;
  std::vector<int> features_;
};

}  // namespace

double DecisionTree::Vote(const double* row) const {
  int node = 0;
  while (nodes[static_cast<std::size_t>(node)].feature >= 0) {
    const TreeNode& n = nodes[static_cast<std::size_t>(node)];
    node = row[n.feature] <= n.threshold ? n.left : n.right;
  }
  const double p = nodes[static_cast<std::size_t>(node)].positive_fraction;
  return p > 0.5 ? 1.0 : (p < 0.5 ? 0.0 : 0.5);
}

Vector ForestModel::Score(const Matrix& x) const {
  Vector score = Vector::Zero(x.rows());
  if (trees.empty()) return score;
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    double votes = 0.0;
    for (const auto& tree : trees) votes += tree.Vote(x.row(r).data());
    score[r] = votes / static_cast<double>(trees.size());
  }
  return score;
}

ForestModel TrainForest(const Matrix& x, const Labels& y, const ForestConfig& cfg) {
  if (cfg.n_trees < 1) throw Error(ErrorCode::kInvalidConfig, "forest needs >= 1 tree");
  const auto n = static_cast<std::size_t>(x.rows());
  if (y.size() != n) throw Error(ErrorCode::kLengthMismatch, "rows and labels differ");
  bool seen[2] = {false, false};
  for (int label : y) {
    if (label != 0 && label != 1) throw Error(ErrorCode::kSchemaError, "labels must be 0 or 1");
    seen[label] = true;
  }
  if (!seen[0] || !seen[1]) throw Error(ErrorCode::kSingleClass, "forest needs both classes");

  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_int_distribution<std::size_t> draw(0, n - 1);
  TreeBuilder builder(x, y, cfg, rng);
  ForestModel forest;
  forest.trees.reserve(static_cast<std::size_t>(cfg.n_trees));
  for (int t = 0; t < cfg.n_trees; ++t) {
    std::vector<std::size_t> bootstrap(n);
    for (auto& s : bootstrap) s = draw(rng);
    forest.trees.push_back(builder.Build(std::move(bootstrap)));
  }
  return forest;
}

}  // namespace stresskit::classifier
