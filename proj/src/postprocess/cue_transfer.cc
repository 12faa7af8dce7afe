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

#include "stresskit/cue_transfer.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "stresskit/error.h"

namespace stresskit {

TargetCueSet MapCues(const std::vector<StressCue>& source_cues, const MtAlignment& alignment) {
  const std::size_t n_src = alignment.source_words.size();
  const std::size_t n_tgt = alignment.target_words.size();
  std::multimap<std::size_t, std::size_t> targets_of;
  for (const auto& [s, t] : alignment.links) {
    if (s >= n_src || t >= n_tgt) {
      throw Error(ErrorCode::kIndexOutOfBounds,
                  "link (" + std::to_string(s) + ", " + std::to_string(t) + ") outside " +
                      std::to_string(n_src) + "x" + std::to_string(n_tgt) + " words");
    }
    targets_of.emplace(s, t);
  }

  struct Merged {
    StressCue cue;
    std::set<std::size_t> sources;
  };
  std::map<std::size_t, Merged> merged;
  std::set<std::size_t> unmapped;
  for (const auto& cue : source_cues) {
    if (cue.word_index >= n_src) {
      throw Error(ErrorCode::kIndexOutOfBounds,
                  "cue on source word " + std::to_string(cue.word_index) + " of " +
                      std::to_string(n_src));
    }
    const auto [first, last] = targets_of.equal_range(cue.word_index);
    if (first == last) {
      unmapped.insert(cue.word_index);
      continue;
    }
    for (auto it = first; it != last; ++it) {
      const std::size_t t = it->second;
      auto [slot, fresh] = merged.try_emplace(t);
      StressCue& out = slot->second.cue;
      if (fresh) {
        out = cue;
        out.word_index = t;
        out.word = alignment.target_words[t];
      } else {
        out.pitch_scale = std::max(out.pitch_scale, cue.pitch_scale);
        out.energy_scale = std::max(out.energy_scale, cue.energy_scale);
        out.duration_scale = std::max(out.duration_scale, cue.duration_scale);
      }
      slot->second.sources.insert(cue.word_index);
    }
  }

  TargetCueSet result;
  for (auto& [t, m] : merged) {
    result.cues.push_back(std::move(m.cue));
    result.sources.emplace_back(m.sources.begin(), m.sources.end());
  }
  result.unmapped_sources.assign(unmapped.begin(), unmapped.end());
  return result;
}

}  // namespace stresskit
