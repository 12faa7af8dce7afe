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

#include "stresskit/pde_modifier.h"

#include <cmath>
#include <map>
#include <string>

#include "stresskit/error.h"

namespace stresskit {

std::int64_t RoundDuration(double frames) {
  const auto rounded = static_cast<std::int64_t>(std::llround(frames));
  return frames > 0.0 && rounded < 1 ? 1 : rounded;
}

ModifiedContours ApplyCues(const TokenContours& contours, const std::vector<StressCue>& cues) {
  const std::size_t n = contours.size();
  if (contours.token_word_index.size() != n || contours.pitch.size() != n ||
      contours.energy.size() != n || contours.duration.size() != n) {
    throw Error(ErrorCode::kLengthMismatch, "token contour lists differ in length");
  }
  std::map<std::size_t, const StressCue*> by_word;
  for (const auto& cue : cues) {
    if (!by_word.emplace(cue.word_index, &cue).second) {
      throw Error(ErrorCode::kSchemaError,
                  "more than one cue for word " + std::to_string(cue.word_index));
    }
  }
  std::map<std::size_t, std::size_t> tokens_per_word;
  for (std::size_t w : contours.token_word_index) ++tokens_per_word[w];
  for (const auto& [w, cue] : by_word) {
    if (!tokens_per_word.contains(w)) {
      throw Error(ErrorCode::kUnknownWordIndex,
                  "cue on word " + std::to_string(w) + " (" + cue->word + ") matches no token");
    }
  }

  ModifiedContours out;
  out.tokens = contours.tokens;
  out.token_word_index = contours.token_word_index;
  out.pitch = contours.pitch;
  out.energy = contours.energy;
  out.duration.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double d = contours.duration[i];
    if (d < 0.0) throw Error(ErrorCode::kNegativeDuration, "token " + std::to_string(i));
    const auto it = by_word.find(contours.token_word_index[i]);
    if (it != by_word.end()) {
      out.pitch[i] *= it->second->pitch_scale;
      out.energy[i] *= it->second->energy_scale;
      d *= it->second->duration_scale;
    }
    out.duration[i] = RoundDuration(d);
  }
  out.applied_cues = cues;
  return out;
}

ModifiedContours ApplyCues(const TokenContours& contours, const TargetCueSet& cues) {
  return ApplyCues(contours, cues.cues);
}

std::vector<double> UpsampleByDuration(std::span<const double> values,
                                       std::span<const std::int64_t> durations) {
  if (values.size() != durations.size()) {
    throw Error(ErrorCode::kLengthMismatch, "values and durations differ in length");
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < durations.size(); ++i) {
    if (durations[i] < 0) {
      throw Error(ErrorCode::kNegativeDuration,
                  "token " + std::to_string(i) + " has duration " + std::to_string(durations[i]));
    }
    total += static_cast<std::size_t>(durations[i]);
  }
  std::vector<double> out;
  out.reserve(total);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.insert(out.end(), static_cast<std::size_t>(durations[i]), values[i]);
  }
  return out;
}

std::vector<StressCue> ClampScales(std::vector<StressCue> cues, const ScaleBounds& bounds) {
  bounds.Validate();
  for (auto& c : cues) {
    c.pitch_scale = bounds.Clamp(c.pitch_scale);
    c.energy_scale = bounds.Clamp(c.energy_scale);
    c.duration_scale = bounds.Clamp(c.duration_scale);
  }
  return cues;
}

TargetCueSet ClampScales(TargetCueSet cues, const ScaleBounds& bounds) {
  cues.cues = ClampScales(std::move(cues.cues), bounds);
  return cues;
}

}  // namespace stresskit
