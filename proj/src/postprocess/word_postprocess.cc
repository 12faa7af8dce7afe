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

#include "stresskit/word_postprocess.h"

#include <algorithm>
#include <cmath>

#include "stresskit/error.h"

namespace stresskit {

void ScaleBounds::Validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo <= 0.0 || lo > hi) {
    throw Error(ErrorCode::kInvalidBounds, "scale bounds must satisfy 0 < lo <= hi, got [" +
                                               std::to_string(lo) + ", " + std::to_string(hi) +
                                               "]");
  }
}

void ScalingConfig::Validate() const {
  bounds.Validate();
  if (!std::isfinite(duration_scale) || duration_scale <= 0.0) {
    throw Error(ErrorCode::kInvalidConfig, "duration scale must be positive");
  }
}

namespace {

// Smallest t in [0, n_frames] with CenterTime(t) >= time.
std::size_t FirstCenterAtOrAfter(double time, const dsp::FrameConfig& grid,
                                 std::size_t n_frames) {
  const double guess = std::ceil((time * grid.sample_rate - 0.5 * grid.frame_len) / grid.hop);
  auto t = static_cast<std::size_t>(std::clamp(guess, 0.0, static_cast<double>(n_frames)));
  // The closed-form guess can be off by one through rounding; settle it
  // against the exact center times.
  while (t > 0 && grid.CenterTime(t - 1) >= time) --t;
  while (t < n_frames && grid.CenterTime(t) < time) ++t;
  return t;
}

double MeanOrZero(double sum, std::size_t count) {
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double Ratio(double inside, std::size_t n_inside, double outside, std::size_t n_outside) {
  if (n_inside == 0 || n_outside == 0) return 1.0;
  const double denom = MeanOrZero(outside, n_outside);
  if (denom == 0.0) return 1.0;
  return MeanOrZero(inside, n_inside) / denom;
}

}  // namespace

FrameRange FramesForWord(const Word& word, const dsp::FrameConfig& grid, std::size_t n_frames) {
  FrameRange range;
  range.begin = FirstCenterAtOrAfter(word.start_s, grid, n_frames);
  range.end = std::max(range.begin, FirstCenterAtOrAfter(word.end_s, grid, n_frames));
  return range;
}

std::vector<WordStressDecision> WordLevelStress(const Labels& frame_preds,
                                                const WordAlignment& words,
                                                const dsp::FrameConfig& grid,
                                                std::size_t n_frames) {
  if (frame_preds.size() != n_frames) {
    throw Error(ErrorCode::kGridMismatch,
                words.audio_id + ": " + std::to_string(frame_preds.size()) +
                    " frame predictions for a grid of " + std::to_string(n_frames) + " frames");
  }
  std::vector<WordStressDecision> out;
  out.reserve(words.words.size());
  for (std::size_t i = 0; i < words.words.size(); ++i) {
    const FrameRange range = FramesForWord(words.words[i], grid, n_frames);
    WordStressDecision d;
    d.word_index = i;
    d.word = words.words[i].text;
    if (!range.empty()) {
      std::size_t stressed = 0;
      for (std::size_t t = range.begin; t < range.end; ++t) stressed += frame_preds[t] == 1 ? 1 : 0;
      d.stressed_frame_fraction =
          static_cast<double>(stressed) / static_cast<double>(range.size());
      d.stressed = 2 * stressed > range.size();
    }
    out.push_back(std::move(d));
  }
  return out;
}

Scales ComputeScalingFactors(std::span<const double> f0, std::span<const double> energy,
                             FrameRange range, const ScalingConfig& cfg) {
  cfg.Validate();
  if (f0.size() != energy.size()) {
    throw Error(ErrorCode::kLengthMismatch, "pitch and energy contours differ in length");
  }
  if (range.empty()) throw Error(ErrorCode::kEmptyRange, "word covers no frames");
  if (range.end > f0.size()) {
    throw Error(ErrorCode::kIndexOutOfBounds, "word frame range exceeds the contour");
  }

  double pitch_in = 0.0, pitch_out = 0.0, energy_in = 0.0, energy_out = 0.0;
  std::size_t voiced_in = 0, voiced_out = 0;
  for (std::size_t t = 0; t < f0.size(); ++t) {
    const bool inside = t >= range.begin && t < range.end;
    if (f0[t] > 0.0) {
      (inside ? pitch_in : pitch_out) += f0[t];
      ++(inside ? voiced_in : voiced_out);
    }
    (inside ? energy_in : energy_out) += energy[t];
  }
  const std::size_t n_out = f0.size() - range.size();

  Scales s;
  s.pitch = cfg.bounds.Clamp(Ratio(pitch_in, voiced_in, pitch_out, voiced_out));
  s.energy = cfg.bounds.Clamp(Ratio(energy_in, range.size(), energy_out, n_out));
  s.duration = cfg.bounds.Clamp(cfg.duration_scale);
  return s;
}

std::vector<StressCue> CuesForStressedWords(const std::vector<WordStressDecision>& decisions,
                                            const WordAlignment& words,
                                            std::span<const double> f0,
                                            std::span<const double> energy,
                                            const dsp::FrameConfig& grid,
                                            const ScalingConfig& cfg) {
  std::vector<StressCue> cues;
  for (const auto& d : decisions) {
    if (!d.stressed) continue;
    if (d.word_index >= words.words.size()) {
      throw Error(ErrorCode::kIndexOutOfBounds, "decision for unknown word index");
    }
    const FrameRange range = FramesForWord(words.words[d.word_index], grid, f0.size());
    const Scales s = ComputeScalingFactors(f0, energy, range, cfg);
    cues.push_back({d.word_index, d.word, s.pitch, s.energy, s.duration});
  }
  return cues;
}

double PostAccuracy(const std::vector<WordStressDecision>& predicted,
                    const std::vector<WordStressDecision>& gold) {
  if (predicted.size() != gold.size()) {
    throw Error(ErrorCode::kWordListMismatch,
                std::to_string(predicted.size()) + " predicted words vs " +
                    std::to_string(gold.size()) + " gold words");
  }
  if (predicted.empty()) throw Error(ErrorCode::kEmpty, "no words to score");
  std::size_t agree = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i].word_index != gold[i].word_index || predicted[i].word != gold[i].word) {
      throw Error(ErrorCode::kWordListMismatch, "word " + std::to_string(i) + " differs");
    }
    agree += predicted[i].stressed == gold[i].stressed ? 1 : 0;
  }
  return static_cast<double>(agree) / static_cast<double>(predicted.size());
}

}  // namespace stresskit
