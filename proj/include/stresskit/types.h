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

// Domain records shared across the detection, transfer and synthesis stages.

#ifndef STRESSKIT_TYPES_H_
#define STRESSKIT_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace stresskit {

// Row-major so that a row is one frame (or one sample) and can be handed out
// as a contiguous span.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// Binary per-frame labels (1 = stressed). The label-propagation trainer also
// accepts -1 for unlabeled rows.
using Labels = std::vector<int>;

struct AudioBuffer {
  std::vector<double> samples;  // mono, in [-1, 1]
  int sample_rate = 0;
  std::string audio_id;
};

struct Word {
  std::string text;
  double start_s = 0.0;
  double end_s = 0.0;

  bool operator==(const Word&) const = default;
};

// ASR output: per-word timestamps in the source audio.
struct WordAlignment {
  std::string audio_id;
  std::vector<Word> words;

  bool operator==(const WordAlignment&) const = default;
};

using AlignmentLink = std::pair<std::size_t, std::size_t>;  // (source, target)

struct MtAlignment {
  std::vector<std::string> source_words;
  std::vector<std::string> target_words;
  std::vector<AlignmentLink> links;

  bool operator==(const MtAlignment&) const = default;
};

struct StressRegion {
  double start_s = 0.0;
  double end_s = 0.0;

  double duration() const { return end_s - start_s; }
  bool operator==(const StressRegion&) const = default;
};

struct AnnotatorRegions {
  std::string annotator_id;
  std::vector<StressRegion> regions;

  bool operator==(const AnnotatorRegions&) const = default;
};

struct AnnotationSet {
  std::string audio_id;
  std::string speaker;  // optional in documents; empty when absent
  int sample_rate = 0;
  double duration_s = 0.0;
  std::vector<AnnotatorRegions> annotations;

  bool operator==(const AnnotationSet&) const = default;
};

// Aggregated gold labels for one utterance.
struct GoldLabels {
  std::string audio_id;
  std::string speaker;
  Labels frame_labels;
  std::vector<StressRegion> gold_regions;
  double kappa = 0.0;

  bool operator==(const GoldLabels&) const = default;
};

struct StressCue {
  std::size_t word_index = 0;
  std::string word;
  double pitch_scale = 1.0;
  double energy_scale = 1.0;
  double duration_scale = 1.0;

  bool operator==(const StressCue&) const = default;
};

// Per-token variance predictions from the TTS front end. Durations are in
// output frames and may be fractional as predicted.
struct TokenContours {
  std::vector<std::string> tokens;
  std::vector<std::size_t> token_word_index;
  std::vector<double> pitch;
  std::vector<double> energy;
  std::vector<double> duration;

  std::size_t size() const { return tokens.size(); }
  bool operator==(const TokenContours&) const = default;
};

// Cues resolved onto target-language words. `sources[i]` lists the source
// word indices whose cues were merged into `cues[i]`.
struct TargetCueSet {
  std::vector<StressCue> cues;
  std::vector<std::vector<std::size_t>> sources;
  std::vector<std::size_t> unmapped_sources;

  bool operator==(const TargetCueSet&) const = default;
};

// Token contours after stress cues were applied. Durations are whole frames.
struct ModifiedContours {
  std::vector<std::string> tokens;
  std::vector<std::size_t> token_word_index;
  std::vector<double> pitch;
  std::vector<double> energy;
  std::vector<std::int64_t> duration;
  std::vector<StressCue> applied_cues;

  bool operator==(const ModifiedContours&) const = default;
};

}  // namespace stresskit

#endif  // STRESSKIT_TYPES_H_
