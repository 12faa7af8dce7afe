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

#include "stresskit/classifier/split.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "stresskit/error.h"

namespace stresskit::classifier {

SplitIndices SpeakerDisjointSplit(const std::vector<std::string>& speaker_of_item,
                                  double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "train fraction must lie in (0, 1)");
  }
  const std::set<std::string> unique(speaker_of_item.begin(), speaker_of_item.end());
  std::vector<std::string> speakers(unique.begin(), unique.end());
  std::mt19937_64 rng(seed);
  std::shuffle(speakers.begin(), speakers.end(), rng);

  auto n_train = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(speakers.size())));
  if (speakers.size() >= 2) n_train = std::clamp<std::size_t>(n_train, 1, speakers.size() - 1);
  const std::set<std::string> train_speakers(speakers.begin(),
                                             speakers.begin() + static_cast<std::ptrdiff_t>(n_train));
  SplitIndices split;
  for (std::size_t i = 0; i < speaker_of_item.size(); ++i) {
    (train_speakers.count(speaker_of_item[i]) ? split.train : split.test).push_back(i);
  }
  return split;
}

}  // namespace stresskit::classifier
