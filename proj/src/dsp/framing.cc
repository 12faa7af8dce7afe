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

#include "stresskit/dsp/framing.h"

#include <cmath>
#include <string>

#include "stresskit/error.h"

namespace stresskit::dsp {

void FrameConfig::Validate() const {
  if (frame_len <= 0 || hop <= 0 || hop > frame_len) {
    throw Error(ErrorCode::kInvalidConfig,
                "frame config needs 0 < hop <= frame_len (hop=" + std::to_string(hop) +
                    ", frame_len=" + std::to_string(frame_len) + ")");
  }
  if (sample_rate <= 0) {
    throw Error(ErrorCode::kInvalidConfig, "sample_rate must be positive");
  }
}

std::size_t FrameConfig::FrameCount(std::size_t n_samples) const {
  if (n_samples == 0) return 0;
  const auto len = static_cast<std::size_t>(frame_len);
  if (n_samples < len) return 1;
  return 1 + (n_samples - len) / static_cast<std::size_t>(hop);
}

std::vector<double> FrameCenterTimes(const FrameConfig& cfg, std::size_t n_frames) {
  std::vector<double> times(n_frames);
  for (std::size_t t = 0; t < n_frames; ++t) times[t] = cfg.CenterTime(t);
  return times;
}

Matrix FrameSignal(const AudioBuffer& audio, const FrameConfig& cfg) {
  cfg.Validate();
  if (audio.samples.empty()) {
    throw Error(ErrorCode::kEmptyAudio, "cannot frame empty audio " + audio.audio_id);
  }
  if (audio.sample_rate != cfg.sample_rate) {
    throw Error(ErrorCode::kInvalidConfig,
                "audio " + audio.audio_id + " is at " + std::to_string(audio.sample_rate) +
                    " Hz but the frame grid expects " + std::to_string(cfg.sample_rate) +
                    " Hz (no resampling is performed)");
  }
  const std::size_t n = audio.samples.size();
  const std::size_t n_frames = cfg.FrameCount(n);
  Matrix frames = Matrix::Zero(static_cast<Eigen::Index>(n_frames), cfg.frame_len);
  for (std::size_t t = 0; t < n_frames; ++t) {
    const std::size_t begin = t * static_cast<std::size_t>(cfg.hop);
    for (int i = 0; i < cfg.frame_len && begin + i < n; ++i) {
      frames(static_cast<Eigen::Index>(t), i) = audio.samples[begin + i];
    }
  }
  return frames;
}

std::vector<double> FrameEnergy(const Matrix& frames) {
  std::vector<double> energy(static_cast<std::size_t>(frames.rows()), 0.0);
  if (frames.cols() == 0) return energy;
  for (Eigen::Index t = 0; t < frames.rows(); ++t) {
    energy[static_cast<std::size_t>(t)] =
        std::sqrt(frames.row(t).squaredNorm() / static_cast<double>(frames.cols()));
  }
  return energy;
}

}  // namespace stresskit::dsp
