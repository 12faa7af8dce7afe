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

#ifndef STRESSKIT_CLASSIFIER_SVC_H_
#define STRESSKIT_CLASSIFIER_SVC_H_

#include <cstddef>

#include "stresskit/types.h"

namespace stresskit::classifier {

struct SvcConfig {
  double penalty_c = 0.8;
  double gamma = 0.0;  // <= 0 selects the "scale" rule
  double tol = 1e-3;   // KKT violation tolerance
  std::size_t cache_mb = 256;
  std::size_t max_iter = 0;  // 0: max(10^7, 100 n)
};

// RBF-kernel SVM: f(x) = sum_i coef_i K(sv_i, x) - rho, K = exp(-gamma |a-b|^2).
struct SvcModel {
  double gamma = 1.0;
  double rho = 0.0;
  Matrix support_vectors;
  Vector coef;  // alpha_i * y_i
  std::size_t iterations = 0;

  Vector Decision(const Matrix& x) const;
};

// Solves the C-SVC dual with SMO, second-order working-set selection. Labels
// are 0/1 (1 maps to +1).
SvcModel TrainSvc(const Matrix& x, const Labels& y, const SvcConfig& cfg);

}  // namespace stresskit::classifier

#endif  // STRESSKIT_CLASSIFIER_SVC_H_
