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

#ifndef STRESSKIT_CLASSIFIER_LABEL_PROPAGATION_H_
#define STRESSKIT_CLASSIFIER_LABEL_PROPAGATION_H_

#include <cstddef>

#include "stresskit/types.h"

namespace stresskit::classifier {

enum class LpaKernel {
  kKnnRbf,  // k-nearest-neighbor graph with RBF edge weights
  kRbf,     // dense RBF affinities over all points
};

struct LpaConfig {
  LpaKernel kernel = LpaKernel::kKnnRbf;
  int n_neighbors = 7;
  double gamma = 0.0;  // <= 0 selects the "scale" rule
  int max_iter = 1000;
  double tol = 1e-3;
};

// Graph label propagation. Training rows labeled 0/1 are clamped; rows
// labeled -1 are unlabeled and receive propagated class-1 probabilities.
// New points are scored by the RBF-weighted average of the probabilities of
// their neighbors among the training rows.
struct LpaModel {
  LpaKernel kernel = LpaKernel::kKnnRbf;
  int n_neighbors = 7;
  double gamma = 1.0;
  Matrix points;
  Vector positive_prob;
  int iterations = 0;

  Vector Score(const Matrix& x) const;
};

LpaModel TrainLabelPropagation(const Matrix& x, const Labels& y, const LpaConfig& cfg);

}  // namespace stresskit::classifier

#endif  // STRESSKIT_CLASSIFIER_LABEL_PROPAGATION_H_
