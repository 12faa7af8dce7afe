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

#include "stresskit/classifier/metrics.h"

#include <string>

#include "stresskit/error.h"

namespace stresskit::classifier {

Metrics MetricsFromConfusion(const Confusion& c) {
  Metrics m;
  m.confusion = c;
  const auto total = static_cast<double>(c.total());
  if (total == 0.0) throw Error(ErrorCode::kEmpty, "no predictions to evaluate");
  m.accuracy = static_cast<double>(c.tp + c.tn) / total;
  const auto tp = static_cast<double>(c.tp);
  m.precision = c.tp + c.fp > 0 ? tp / static_cast<double>(c.tp + c.fp) : 0.0;
  m.recall = c.tp + c.fn > 0 ? tp / static_cast<double>(c.tp + c.fn) : 0.0;
  if (c.tp == 0) {
    m.f1 = c.fp + c.fn == 0 ? 1.0 : 0.0;
  } else {
    m.f1 = 2.0 * tp / (2.0 * tp + static_cast<double>(c.fp + c.fn));
  }
  return m;
}

Metrics Evaluate(const Labels& predicted, const Labels& truth) {
  if (predicted.size() != truth.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(predicted.size()) + " predictions vs " +
                    std::to_string(truth.size()) + " labels");
  }
  if (truth.empty()) throw Error(ErrorCode::kEmpty, "no predictions to evaluate");
  Confusion c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool p = predicted[i] == 1;
    const bool t = truth[i] == 1;
    if (p && t) ++c.tp;
    else if (p) ++c.fp;
    else if (t) ++c.fn;
    else ++c.tn;
  }
  return MetricsFromConfusion(c);
}

}  // namespace stresskit::classifier
