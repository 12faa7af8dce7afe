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

#ifndef STRESSKIT_CLASSIFIER_METRICS_H_
#define STRESSKIT_CLASSIFIER_METRICS_H_

#include <cstddef>

#include "stresskit/types.h"

namespace stresskit::classifier {

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
};

// Accuracy plus precision/recall/F1 of the stressed class. Precision and
// recall are 0 when undefined; F1 is 0 when TP = 0 and FP + FN > 0, and 1 when
// there is nothing to find and nothing was predicted.
struct Metrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  Confusion confusion;
};

Metrics MetricsFromConfusion(const Confusion& c);
Metrics Evaluate(const Labels& predicted, const Labels& truth);

}  // namespace stresskit::classifier

#endif  // STRESSKIT_CLASSIFIER_METRICS_H_
