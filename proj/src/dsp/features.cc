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

#include "stresskit/dsp/features.h"

#include <nlohmann/json.hpp>

#include "stresskit/dsp/normalize.h"
#include "stresskit/error.h"
#include "stresskit/io/digest.h"

namespace stresskit::dsp {

using nlohmann::json;

const char* FeatureSetName(FeatureSet set) {
  return set == FeatureSet::kF0Energy ? "f0e" : "full";
}

FeatureSet ParseFeatureSet(const std::string& name) {
  if (name == "f0e") return FeatureSet::kF0Energy;
  if (name == "full") return FeatureSet::kFull;
  throw Error(ErrorCode::kInvalidConfig, "unknown feature set \"" + name + "\" (f0e|full)");
}

void FeatureConfig::Validate() const {
  frame.Validate();
  pitch.Validate(frame.sample_rate);
  if (set == FeatureSet::kFull) {
    mfcc.Validate(frame.sample_rate);
    sdc.Validate();
    if (sdc.n_base != mfcc.n_coeffs) {
      throw Error(ErrorCode::kInvalidConfig, "SDC n_base must equal the MFCC count");
    }
  }
  if (window < 1 || window % 2 == 0) {
    throw Error(ErrorCode::kWindowEven,
                "context window must be a positive odd count, got " + std::to_string(window));
  }
}

int FeatureConfig::BaseWidth() const {
  return set == FeatureSet::kF0Energy ? 2 : 2 + mfcc.n_coeffs + sdc.Width();
}

std::vector<std::string> FeatureConfig::ColumnLayout() const {
  std::vector<std::string> base{"f0", "energy"};
  if (set == FeatureSet::kFull) {
    for (int i = 0; i < mfcc.n_coeffs; ++i) base.push_back("mfcc" + std::to_string(i));
    for (int i = 0; i < sdc.Width(); ++i) base.push_back("sdc" + std::to_string(i));
  }
  if (window == 1) return base;
  std::vector<std::string> layout;
  const int half = (window - 1) / 2;
  for (int o = -half; o <= half; ++o) {
    for (const auto& name : base) layout.push_back(name + "@" + std::to_string(o));
  }
  return layout;
}

std::string FeatureConfig::Digest() const {
  return io::Sha256Hex(FeatureConfigToJson(*this).dump());
}

json FeatureConfigToJson(const FeatureConfig& cfg) {
  return json{
      {"frame",
       {{"frame_len", cfg.frame.frame_len},
        {"hop", cfg.frame.hop},
        {"sample_rate", cfg.frame.sample_rate}}},
      {"pitch",
       {{"f0_min", cfg.pitch.f0_min},
        {"f0_max", cfg.pitch.f0_max},
        {"voicing_threshold", cfg.pitch.voicing_threshold}}},
      {"mfcc",
       {{"n_coeffs", cfg.mfcc.n_coeffs},
        {"n_mels", cfg.mfcc.n_mels},
        {"fmin", cfg.mfcc.fmin},
        {"fmax", cfg.mfcc.fmax},
        {"log_floor", cfg.mfcc.log_floor}}},
      {"sdc", {{"d", cfg.sdc.d}, {"p", cfg.sdc.p}, {"k", cfg.sdc.k}, {"n_base", cfg.sdc.n_base}}},
      {"feature_set", FeatureSetName(cfg.set)},
      {"window", cfg.window},
  };
}

namespace {

template <typename T>
void Read(const json& j, const char* key, T& out) {
  if (!j.is_object() || !j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaError, std::string("bad value for \"") + key + "\"");
  }
}

}  // namespace

FeatureConfig FeatureConfigFromJson(const json& j) {
  FeatureConfig cfg;
  if (j.contains("frame")) {
    const json& f = j["frame"];
    Read(f, "frame_len", cfg.frame.frame_len);
    Read(f, "hop", cfg.frame.hop);
    Read(f, "sample_rate", cfg.frame.sample_rate);
  }
  if (j.contains("pitch")) {
    const json& p = j["pitch"];
    Read(p, "f0_min", cfg.pitch.f0_min);
    Read(p, "f0_max", cfg.pitch.f0_max);
    Read(p, "voicing_threshold", cfg.pitch.voicing_threshold);
  }
  if (j.contains("mfcc")) {
    const json& m = j["mfcc"];
    Read(m, "n_coeffs", cfg.mfcc.n_coeffs);
    Read(m, "n_mels", cfg.mfcc.n_mels);
    Read(m, "fmin", cfg.mfcc.fmin);
    Read(m, "fmax", cfg.mfcc.fmax);
    Read(m, "log_floor", cfg.mfcc.log_floor);
  }
  if (j.contains("sdc")) {
    const json& s = j["sdc"];
    Read(s, "d", cfg.sdc.d);
    Read(s, "p", cfg.sdc.p);
    Read(s, "k", cfg.sdc.k);
    Read(s, "n_base", cfg.sdc.n_base);
  }
  std::string set = FeatureSetName(cfg.set);
  Read(j, "feature_set", set);
  cfg.set = ParseFeatureSet(set);
  Read(j, "window", cfg.window);
  return cfg;
}

AcousticContours ComputeContours(const AudioBuffer& audio, const FeatureConfig& cfg) {
  cfg.Validate();
  const Matrix frames = FrameSignal(audio, cfg.frame);
  AcousticContours c;
  c.energy = FrameEnergy(frames);
  c.f0 = EstimateF0(frames, cfg.frame, cfg.pitch);
  if (cfg.set == FeatureSet::kFull) {
    c.mfcc = MfccExtractor(cfg.frame, cfg.mfcc).Compute(frames);
  }
  c.frame_times = FrameCenterTimes(cfg.frame, c.f0.size());
  return c;
}

FeatureMatrix AssembleFeatures(const AcousticContours& contours, const FeatureConfig& cfg) {
  cfg.Validate();
  const auto n = static_cast<Eigen::Index>(contours.n_frames());
  if (contours.energy.size() != contours.f0.size()) {
    throw Error(ErrorCode::kGridMismatch, "F0 and energy contours differ in length");
  }
  Matrix base(n, cfg.BaseWidth());
  for (Eigen::Index t = 0; t < n; ++t) {
    base(t, 0) = contours.f0[static_cast<std::size_t>(t)];
    base(t, 1) = contours.energy[static_cast<std::size_t>(t)];
  }
  if (cfg.set == FeatureSet::kFull) {
    if (contours.mfcc.rows() != n || contours.mfcc.cols() != cfg.mfcc.n_coeffs) {
      throw Error(ErrorCode::kGridMismatch, "MFCC matrix does not match the frame grid");
    }
    base.block(0, 2, n, cfg.mfcc.n_coeffs) = contours.mfcc;
    base.block(0, 2 + cfg.mfcc.n_coeffs, n, cfg.sdc.Width()) =
        ComputeSdc(contours.mfcc, cfg.sdc);
  }
  const Matrix stacked = StackContext(MeanVarianceNormalize(base).values, cfg.window);
  FeatureMatrix out = FeatureMatrix::FromMatrix(stacked, cfg.Digest());
  out.column_layout = cfg.ColumnLayout();
  out.frame_times = contours.frame_times;
  return out;
}

FeatureMatrix AssembleFeatures(const AudioBuffer& audio, const FeatureConfig& cfg) {
  return AssembleFeatures(ComputeContours(audio, cfg), cfg);
}

}  // namespace stresskit::dsp
