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

#ifndef STRESSKIT_CLASSIFIER_MODEL_H_
#define STRESSKIT_CLASSIFIER_MODEL_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stresskit/classifier/label_propagation.h"
#include "stresskit/classifier/random_forest.h"
#include "stresskit/classifier/smote.h"
#include "stresskit/classifier/svc.h"
#include "stresskit/dsp/features.h"
#include "stresskit/dsp/normalize.h"
#include "stresskit/feature_matrix.h"
#include "stresskit/types.h"

namespace stresskit::classifier {

enum class ModelFamily { kSvc, kRfc, kLpa };

const char* ModelFamilyName(ModelFamily family);  // "svc" / "rfc" / "lpa"
ModelFamily ParseModelFamily(const std::string& name);

struct ModelConfig {
  ModelFamily family = ModelFamily::kLpa;
  SvcConfig svc;
  ForestConfig rfc;
  LpaConfig lpa;
};

struct TrainConfig {
  ModelConfig model;
  std::optional<SmoteConfig> smote;  // applied after global normalization
  // Layout the training rows were produced with; predictions on rows with a
  // different digest are refused.
  std::string feature_digest;
  std::optional<dsp::FeatureConfig> feature_config;
};

inline constexpr int kModelFormatVersion = 1;

// A trained, immutable frame classifier.
struct StressModel {
  ModelFamily family = ModelFamily::kLpa;
  std::variant<SvcModel, ForestModel, LpaModel> params;
  dsp::NormStats norm;
  std::string feature_digest;
  std::optional<dsp::FeatureConfig> feature_config;
  std::size_t n_features = 0;
};

struct Prediction {
  Labels labels;               // score >= 0.5
  std::vector<double> scores;  // in [0, 1]
};

// Fits global normalization stats on `x`, oversamples with SMOTE when
// configured, then trains the selected family.
StressModel Train(const Matrix& x, const Labels& y, const TrainConfig& cfg);

// LayoutMismatch unless the matrix digest equals the model's.
Prediction Predict(const StressModel& model, const FeatureMatrix& x);
// Only the column count is checked.
Prediction PredictMatrix(const StressModel& model, const Matrix& x);

std::string SerializeModel(const StressModel& model);
// VersionMismatch for an unreadable header or unknown format_version.
StressModel ParseModel(std::string_view text);

void SaveModel(const StressModel& model, const std::filesystem::path& path);
StressModel LoadModel(const std::filesystem::path& path);

}  // namespace stresskit::classifier

#endif  // STRESSKIT_CLASSIFIER_MODEL_H_
