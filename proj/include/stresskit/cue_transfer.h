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

#ifndef STRESSKIT_CUE_TRANSFER_H_
#define STRESSKIT_CUE_TRANSFER_H_

#include <vector>

#include "stresskit/types.h"

namespace stresskit {

// Copies each source-word cue onto every target word it is linked to. A
// target reached from several cued sources takes the element-wise maximum of
// their scales. Cued sources without links are listed in unmapped_sources.
// Output cues are ordered by target index and do not depend on link order.
// IndexOutOfBounds for cue or link indices outside the alignment.
TargetCueSet MapCues(const std::vector<StressCue>& source_cues, const MtAlignment& alignment);

}  // namespace stresskit

#endif  // STRESSKIT_CUE_TRANSFER_H_
