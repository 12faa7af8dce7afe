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

#ifndef STRESSKIT_CLASSIFIER_SMOTE_H_
#define STRESSKIT_CLASSIFIER_SMOTE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stresskit/types.h"

namespace stresskit::classifier {

struct SmoteConfig {
  int k_neighbors = 5;
  // Desired minority/majority count ratio after oversampling.
  double target_ratio = 1.0;
  std::uint64_t rng_seed = 0;

  void Validate() const;
};

// Provenance of one synthetic row: base + u * (neighbor - base), with both
// indices into the input matrix.
struct SyntheticOrigin {
  std::size_t base;
  std::size_t neighbor;
  double u;
};

struct SmoteResult {
  Matrix x;  // input rows first, verbatim, then synthetic minority rows
  Labels y;
  std::vector<SyntheticOrigin> origins;
  bool passthrough = false;  // minority too small to interpolate
  std::string warning;
};

// Synthetic Minority Oversampling. Labels must be 0/1 with both present
// (SingleClass otherwise). The effective neighbor count is
// min(k_neighbors, minority - 1); with fewer than two minority rows the data
// is returned unchanged with a warning. Deterministic for a fixed seed.
SmoteResult SmoteOversample(const Matrix& x, const Labels& y, const SmoteConfig& cfg);

}  // namespace stresskit::classifier

#endif  // STRESSKIT_CLASSIFIER_SMOTE_H_
