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

#ifndef STRESSKIT_CLI_CONFIG_H_
#define STRESSKIT_CLI_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "stresskit/annotation.h"
#include "stresskit/classifier/model.h"
#include "stresskit/classifier/smote.h"
#include "stresskit/dsp/features.h"
#include "stresskit/word_postprocess.h"

namespace stresskit::cli {

// Everything a pipeline run depends on. Resolved as defaults, then the JSON
// config file, then command-line flags.
struct PipelineConfig {
  dsp::FeatureConfig feature;
  classifier::ModelConfig model;
  std::optional<classifier::SmoteConfig> smote = classifier::SmoteConfig{};
  annotation::AggregateOptions aggregate;
  ScalingConfig scaling;
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
  int jobs = 0;  // 0: hardware concurrency

  // Pushes `seed` into every seeded component.
  void PropagateSeed();
  void Validate() const;
  int EffectiveJobs() const;
};

nlohmann::json PipelineConfigToJson(const PipelineConfig& cfg);
// Overlays the keys present in `j` onto `base`. Unknown keys are rejected
// with InvalidConfig.
PipelineConfig ApplyConfigJson(PipelineConfig base, const nlohmann::json& j);
PipelineConfig LoadConfigFile(PipelineConfig base, const std::filesystem::path& path);

// "LO:HI" -> bounds; InvalidBounds when malformed.
ScaleBounds ParseClamp(std::string_view text);

}  // namespace stresskit::cli

#endif  // STRESSKIT_CLI_CONFIG_H_
