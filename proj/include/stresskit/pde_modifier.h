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

#ifndef STRESSKIT_PDE_MODIFIER_H_
#define STRESSKIT_PDE_MODIFIER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "stresskit/scale_bounds.h"
#include "stresskit/types.h"

namespace stresskit {

// Integer frame count for a predicted duration: round half away from zero,
// but never below one frame for a positive prediction.
std::int64_t RoundDuration(double frames);

// Scales pitch, energy and duration of every token belonging to a cued word.
// Other tokens keep their pitch and energy bit for bit; every duration goes
// through RoundDuration. UnknownWordIndex when a cue names a word without
// tokens.
ModifiedContours ApplyCues(const TokenContours& contours, const std::vector<StressCue>& cues);
ModifiedContours ApplyCues(const TokenContours& contours, const TargetCueSet& cues);

// Repeats values[i] durations[i] times. NegativeDuration for any d < 0.
std::vector<double> UpsampleByDuration(std::span<const double> values,
                                       std::span<const std::int64_t> durations);

// min(hi, max(lo, s)) on every scale. InvalidBounds for bad bounds.
std::vector<StressCue> ClampScales(std::vector<StressCue> cues, const ScaleBounds& bounds);
TargetCueSet ClampScales(TargetCueSet cues, const ScaleBounds& bounds);

}  // namespace stresskit

#endif  // STRESSKIT_PDE_MODIFIER_H_
