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

#ifndef STRESSKIT_DSP_NORMALIZE_H_
#define STRESSKIT_DSP_NORMALIZE_H_

#include <vector>

#include "stresskit/types.h"

namespace stresskit::dsp {

// Per-column population mean and standard deviation. A zero stddev marks a
// constant column, which normalizes to all zeros.
struct NormStats {
  std::vector<double> mean;
  std::vector<double> stddev;

  Matrix Apply(const Matrix& m) const;
  bool operator==(const NormStats&) const = default;
};

NormStats FitNormStats(const Matrix& m);

struct Normalized {
  Matrix values;
  NormStats stats;
};

Normalized MeanVarianceNormalize(const Matrix& m);

// Row t of the result concatenates rows t-(w-1)/2 .. t+(w-1)/2 of `m`, with
// the first/last row replicated past the edges. `window` must be odd.
Matrix StackContext(const Matrix& m, int window);

}  // namespace stresskit::dsp

#endif  // STRESSKIT_DSP_NORMALIZE_H_
