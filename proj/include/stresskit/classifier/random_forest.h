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

#ifndef STRESSKIT_CLASSIFIER_RANDOM_FOREST_H_
#define STRESSKIT_CLASSIFIER_RANDOM_FOREST_H_

#include <cstdint>
#include <vector>

#include "stresskit/types.h"

namespace stresskit::classifier {

struct ForestConfig {
  int n_trees = 100;
  int max_depth = 0;          // 0: grow until pure
  int min_samples_split = 2;
  int max_features = 0;       // 0: floor(sqrt(n_features))
  std::uint64_t rng_seed = 0;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;     // taken when x[feature] <= threshold
  int right = -1;
  double positive_fraction = 0.0;

  bool operator==(const TreeNode&) const = default;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  // 1 or 0 by leaf majority, 0.5 on an exact tie.
  double Vote(const double* row) const;
  bool operator==(const DecisionTree&) const = default;
};

struct ForestModel {
  std::vector<DecisionTree> trees;

  // Fraction of trees voting "stressed".
  Vector Score(const Matrix& x) const;
  bool operator==(const ForestModel&) const = default;
};

// Bootstrap-aggregated CART trees with Gini splits and per-node feature
// subsampling. Labels are 0/1.
ForestModel TrainForest(const Matrix& x, const Labels& y, const ForestConfig& cfg);

}  // namespace stresskit::classifier

#endif  // STRESSKIT_CLASSIFIER_RANDOM_FOREST_H_
