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

#ifndef STRESSKIT_DSP_FRAMING_H_
#define STRESSKIT_DSP_FRAMING_H_

#include <cstddef>
#include <vector>

#include "stresskit/types.h"

namespace stresskit::dsp {

// Analysis grid shared by every contour. Frame t covers samples
// [t*hop, t*hop + frame_len) and is timestamped at its center.
struct FrameConfig {
  int frame_len = 1024;
  int hop = 256;
  int sample_rate = 16000;

  void Validate() const;

  // 1 + floor((n - frame_len) / hop) when n >= frame_len, else 1 (the
  // zero-padded short-audio frame). Zero samples give zero frames.
  std::size_t FrameCount(std::size_t n_samples) const;

  double CenterTime(std::size_t t) const {
    return (0.5 * frame_len + static_cast<double>(hop) * static_cast<double>(t)) /
           sample_rate;
  }
  double HopSeconds() const { return static_cast<double>(hop) / sample_rate; }

  bool operator==(const FrameConfig&) const = default;
};

std::vector<double> FrameCenterTimes(const FrameConfig& cfg, std::size_t n_frames);

// One row per frame, no analysis window applied. Audio shorter than one frame
// yields a single zero-padded frame. The audio sample rate must equal
// cfg.sample_rate.
Matrix FrameSignal(const AudioBuffer& audio, const FrameConfig& cfg);

// Root-mean-square of each frame.
std::vector<double> FrameEnergy(const Matrix& frames);

}  // namespace stresskit::dsp

#endif  // STRESSKIT_DSP_FRAMING_H_
