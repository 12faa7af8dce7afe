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

#ifndef STRESSKIT_CLASSIFIER_SPLIT_H_
#define STRESSKIT_CLASSIFIER_SPLIT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stresskit::classifier {

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Partitions item indices so that no speaker appears on both sides. Speakers
// are shuffled with `seed` and round(train_fraction * n_speakers) of them
// (at least one on each side when there are two or more) go to training.
SplitIndices SpeakerDisjointSplit(const std::vector<std::string>& speaker_of_item,
                                  double train_fraction, std::uint64_t seed);

}  // namespace stresskit::classifier

#endif  // STRESSKIT_CLASSIFIER_SPLIT_H_
