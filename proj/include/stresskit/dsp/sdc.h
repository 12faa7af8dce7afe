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

#ifndef STRESSKIT_DSP_SDC_H_
#define STRESSKIT_DSP_SDC_H_

#include "stresskit/types.h"

namespace stresskit::dsp {

// Shifted delta cepstra. Block i of frame t is
//   c[t + i*p + d] - c[t + i*p - d],  i = 0 .. k-1,
// with frame indices clamped to the valid range. Output width n_base * k.
struct SdcConfig {
  int d = 1;
  int p = 5;
  int k = 4;
  int n_base = 13;

  void Validate() const;
  int Width() const { return n_base * k; }
  bool operator==(const SdcConfig&) const = default;
};

Matrix ComputeSdc(const Matrix& mfcc, const SdcConfig& cfg);

}  // namespace stresskit::dsp

#endif  // STRESSKIT_DSP_SDC_H_
