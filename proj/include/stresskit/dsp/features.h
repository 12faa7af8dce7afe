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

#ifndef STRESSKIT_DSP_FEATURES_H_
#define STRESSKIT_DSP_FEATURES_H_

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stresskit/dsp/framing.h"
#include "stresskit/dsp/mfcc.h"
#include "stresskit/dsp/pitch.h"
#include "stresskit/dsp/sdc.h"
#include "stresskit/feature_matrix.h"
#include "stresskit/types.h"

namespace stresskit::dsp {

enum class FeatureSet {
  kF0Energy,  // [F0, energy]
  kFull,      // [F0, energy, MFCC x13, SDC x52]
};

const char* FeatureSetName(FeatureSet set);  // "f0e" / "full"
FeatureSet ParseFeatureSet(const std::string& name);

struct FeatureConfig {
  FrameConfig frame;
  PitchConfig pitch;
  MfccConfig mfcc;
  SdcConfig sdc;
  FeatureSet set = FeatureSet::kFull;
  int window = 7;

  void Validate() const;

  // Width per frame before context stacking (2 or 67 with defaults).
  int BaseWidth() const;
  int Width() const { return BaseWidth() * window; }
  std::vector<std::string> ColumnLayout() const;

  // SHA-256 (hex) of the canonical JSON form; stamped into feature files and
  // models so mismatched layouts are caught.
  std::string Digest() const;

  bool operator==(const FeatureConfig&) const = default;
};

nlohmann::json FeatureConfigToJson(const FeatureConfig& cfg);
// Missing keys keep their defaults.
FeatureConfig FeatureConfigFromJson(const nlohmann::json& j);

// Raw per-frame contours on one analysis grid. `mfcc` is empty for the
// F0+energy feature set.
struct AcousticContours {
  std::vector<double> f0;
  std::vector<double> energy;
  Matrix mfcc;
  std::vector<double> frame_times;

  std::size_t n_frames() const { return f0.size(); }
};

AcousticContours ComputeContours(const AudioBuffer& audio, const FeatureConfig& cfg);

// Per-utterance mean-variance normalization of the base columns, followed by
// context stacking.
FeatureMatrix AssembleFeatures(const AcousticContours& contours, const FeatureConfig& cfg);
FeatureMatrix AssembleFeatures(const AudioBuffer& audio, const FeatureConfig& cfg);

}  // namespace stresskit::dsp

#endif  // STRESSKIT_DSP_FEATURES_H_
