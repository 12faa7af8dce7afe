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

#ifndef STRESSKIT_DSP_PITCH_H_
#define STRESSKIT_DSP_PITCH_H_

#include <span>
#include <vector>

#include "stresskit/dsp/framing.h"
#include "stresskit/types.h"

namespace stresskit::dsp {

struct PitchConfig {
  double f0_min = 60.0;
  double f0_max = 400.0;
  // Minimum normalized-autocorrelation peak for a frame to count as voiced.
  double voicing_threshold = 0.3;

  void Validate(int sample_rate) const;
  bool operator==(const PitchConfig&) const = default;
};

// F0 of a single frame in Hz, or 0.0 when unvoiced.
double EstimateFrameF0(std::span<const double> frame, int sample_rate,
                       const PitchConfig& cfg);

// Per-frame F0 on the analysis grid; unvoiced frames are 0.0 and voiced ones
// lie in [f0_min, f0_max].
std::vector<double> EstimateF0(const Matrix& frames, const FrameConfig& frame_cfg,
                               const PitchConfig& pitch_cfg);
std::vector<double> EstimateF0(const AudioBuffer& audio, const FrameConfig& frame_cfg,
                               const PitchConfig& pitch_cfg);

}  // namespace stresskit::dsp

#endif  // STRESSKIT_DSP_PITCH_H_
