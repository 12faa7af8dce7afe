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

#ifndef STRESSKIT_SCALE_BOUNDS_H_
#define STRESSKIT_SCALE_BOUNDS_H_

namespace stresskit {

// Closed interval that every emitted scaling factor is clamped into.
struct ScaleBounds {
  double lo = 0.5;
  double hi = 2.0;

  // InvalidBounds unless 0 < lo <= hi and both are finite.
  void Validate() const;
  double Clamp(double s) const { return s < lo ? lo : (s > hi ? hi : s); }

  bool operator==(const ScaleBounds&) const = default;
};

}  // namespace stresskit

#endif  // STRESSKIT_SCALE_BOUNDS_H_
