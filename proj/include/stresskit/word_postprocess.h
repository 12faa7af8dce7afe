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

#ifndef STRESSKIT_WORD_POSTPROCESS_H_
#define STRESSKIT_WORD_POSTPROCESS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stresskit/dsp/framing.h"
#include "stresskit/scale_bounds.h"
#include "stresskit/types.h"

namespace stresskit {

// Half-open range of frame indices.
struct FrameRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return end == begin; }
  bool operator==(const FrameRange&) const = default;
};

// Frames of an `n_frames` grid whose centers lie in [word.start_s, word.end_s).
// Words shorter than a hop may get an empty range.
FrameRange FramesForWord(const Word& word, const dsp::FrameConfig& grid, std::size_t n_frames);

struct WordStressDecision {
  std::size_t word_index = 0;
  std::string word;
  bool stressed = false;
  double stressed_frame_fraction = 0.0;

  bool operator==(const WordStressDecision&) const = default;
};

// A word is stressed when strictly more than half of its frames are. Words
// with no frames are unstressed with fraction 0. GridMismatch when
// `frame_preds` does not hold exactly `n_frames` labels.
std::vector<WordStressDecision> WordLevelStress(const Labels& frame_preds,
                                                const WordAlignment& words,
                                                const dsp::FrameConfig& grid,
                                                std::size_t n_frames);

struct ScalingConfig {
  double duration_scale = 1.0;
  ScaleBounds bounds;

  void Validate() const;
};

struct Scales {
  double pitch = 1.0;
  double energy = 1.0;
  double duration = 1.0;

  bool operator==(const Scales&) const = default;
};

// Mean-ratio of the contour inside `range` to the contour outside it. Pitch
// averages voiced frames (F0 > 0) only; energy averages all frames. A missing
// or zero denominator gives 1.0. EmptyRange for an empty range.
Scales ComputeScalingFactors(std::span<const double> f0, std::span<const double> energy,
                             FrameRange range, const ScalingConfig& cfg = {});

// One cue per stressed word, scales computed against the rest of the
// utterance.
std::vector<StressCue> CuesForStressedWords(const std::vector<WordStressDecision>& decisions,
                                            const WordAlignment& words,
                                            std::span<const double> f0,
                                            std::span<const double> energy,
                                            const dsp::FrameConfig& grid,
                                            const ScalingConfig& cfg = {});

// Fraction of words whose decisions agree. WordListMismatch when the two
// lists do not describe the same words; Empty for zero words.
double PostAccuracy(const std::vector<WordStressDecision>& predicted,
                    const std::vector<WordStressDecision>& gold);

}  // namespace stresskit

#endif  // STRESSKIT_WORD_POSTPROCESS_H_
