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

#include "stresskit/io/documents.h"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "stresskit/error.h"

namespace stresskit::io {
namespace {

using nlohmann::json;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaError, std::string("invalid JSON: ") + e.what());
  }
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

const json& Field(const json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaError, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorCode::kSchemaError, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string String(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_string()) {
    throw Error(ErrorCode::kSchemaError, std::string("\"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

double AsNumber(const json& v, const char* what) {
  if (!v.is_number()) {
    throw Error(ErrorCode::kSchemaError, std::string(what) + " must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::kSchemaError, std::string(what) + " must be finite");
  }
  return x;
}

double Number(const json& j, const char* key) { return AsNumber(Field(j, key), key); }

std::size_t AsIndex(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(ErrorCode::kSchemaError,
                std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

const json& Array(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_array()) {
    throw Error(ErrorCode::kSchemaError, std::string("\"") + key + "\" must be an array");
  }
  return v;
}

std::vector<std::string> StringList(const json& j, const char* key) {
  std::vector<std::string> out;
  for (const json& v : Array(j, key)) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kSchemaError,
                  std::string("\"") + key + "\" must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<double> NumberList(const json& j, const char* key) {
  std::vector<double> out;
  for (const json& v : Array(j, key)) out.push_back(AsNumber(v, key));
  return out;
}

std::vector<std::size_t> IndexList(const json& j, const char* key) {
  std::vector<std::size_t> out;
  for (const json& v : Array(j, key)) out.push_back(AsIndex(v, key));
  return out;
}

StressRegion ParseRegion(const json& j) {
  StressRegion r{Number(j, "start_s"), Number(j, "end_s")};
  if (r.start_s < 0.0 || r.end_s <= r.start_s) {
    throw Error(ErrorCode::kRangeError,
                "region [" + std::to_string(r.start_s) + ", " +
                    std::to_string(r.end_s) + "] is empty or negative");
  }
  return r;
}

json RegionJson(const StressRegion& r) {
  return json{{"start_s", r.start_s}, {"end_s", r.end_s}};
}

json CueJson(const StressCue& c) {
  return json{{"word_index", c.word_index},
              {"word", c.word},
              {"pitch_scale", c.pitch_scale},
              {"energy_scale", c.energy_scale},
              {"duration_scale", c.duration_scale}};
}

StressCue ParseCue(const json& j) {
  StressCue c;
  c.word_index = AsIndex(Field(j, "word_index"), "word_index");
  c.word = String(j, "word");
  c.pitch_scale = Number(j, "pitch_scale");
  c.energy_scale = Number(j, "energy_scale");
  c.duration_scale = Number(j, "duration_scale");
  if (c.pitch_scale <= 0.0 || c.energy_scale <= 0.0 || c.duration_scale <= 0.0) {
    throw Error(ErrorCode::kRangeError, "cue scales must be positive");
  }
  return c;
}

std::vector<StressCue> ParseCueArray(const json& doc) {
  std::vector<StressCue> cues;
  for (const json& c : Array(doc, "cues")) cues.push_back(ParseCue(c));
  return cues;
}

void CheckTokenFields(std::size_t n, std::size_t word_index, std::size_t pitch,
                      std::size_t energy, std::size_t duration) {
  if (word_index != n || pitch != n || energy != n || duration != n) {
    throw Error(ErrorCode::kSchemaError,
                "token_word_index, pitch, energy and duration must match tokens in length");
  }
}

void CheckNondecreasing(const std::vector<std::size_t>& idx) {
  if (!std::is_sorted(idx.begin(), idx.end())) {
    throw Error(ErrorCode::kSchemaError, "token_word_index must be nondecreasing");
  }
}

}  // namespace

AnnotationSet ParseAnnotationSet(std::string_view text) {
  const json doc = ParseJson(text);
  AnnotationSet set;
  set.audio_id = String(doc, "audio_id");
  if (doc.contains("speaker")) set.speaker = String(doc, "speaker");
  const json& rate = Field(doc, "sample_rate");
  if (!rate.is_number_integer() || rate.get<std::int64_t>() <= 0) {
    throw Error(ErrorCode::kSchemaError, "sample_rate must be a positive integer");
  }
  set.sample_rate = rate.get<int>();
  set.duration_s = Number(doc, "duration_s");
  if (set.duration_s <= 0.0) {
    throw Error(ErrorCode::kRangeError, "duration_s must be positive");
  }
  for (const json& a : Array(doc, "annotations")) {
    AnnotatorRegions ann;
    ann.annotator_id = String(a, "annotator_id");
    for (const json& r : Array(a, "regions")) {
      StressRegion region = ParseRegion(r);
      if (region.end_s > set.duration_s) {
        throw Error(ErrorCode::kRangeError,
                    "region of annotator " + ann.annotator_id + " ends at " +
                        std::to_string(region.end_s) + " s, past duration " +
                        std::to_string(set.duration_s) + " s");
      }
      ann.regions.push_back(region);
    }
    set.annotations.push_back(std::move(ann));
  }
  return set;
}

std::string SerializeAnnotationSet(const AnnotationSet& set) {
  json anns = json::array();
  for (const auto& a : set.annotations) {
    json regions = json::array();
    for (const auto& r : a.regions) regions.push_back(RegionJson(r));
    anns.push_back(json{{"annotator_id", a.annotator_id}, {"regions", regions}});
  }
  json doc{{"audio_id", set.audio_id},
           {"sample_rate", set.sample_rate},
           {"duration_s", set.duration_s},
           {"annotations", anns}};
  if (!set.speaker.empty()) doc["speaker"] = set.speaker;
  return Dump(doc);
}

WordAlignment ParseWordAlignment(std::string_view text) {
  const json doc = ParseJson(text);
  WordAlignment wa;
  wa.audio_id = String(doc, "audio_id");
  for (const json& w : Array(doc, "words")) {
    Word word{String(w, "text"), Number(w, "start_s"), Number(w, "end_s")};
    if (word.start_s < 0.0 || word.end_s <= word.start_s) {
      throw Error(ErrorCode::kRangeError, "word \"" + word.text + "\" has an empty interval");
    }
    if (!wa.words.empty() && word.start_s < wa.words.back().start_s) {
      throw Error(ErrorCode::kSchemaError, "words must be ordered by start_s");
    }
    wa.words.push_back(std::move(word));
  }
  return wa;
}

std::string SerializeWordAlignment(const WordAlignment& alignment) {
  json words = json::array();
  for (const auto& w : alignment.words) {
    words.push_back(json{{"text", w.text}, {"start_s", w.start_s}, {"end_s", w.end_s}});
  }
  return Dump(json{{"audio_id", alignment.audio_id}, {"words", words}});
}

MtAlignment ParseMtAlignment(std::string_view text) {
  const json doc = ParseJson(text);
  MtAlignment mt;
  mt.source_words = StringList(doc, "source_words");
  mt.target_words = StringList(doc, "target_words");
  for (const json& link : Array(doc, "links")) {
    if (!link.is_array() || link.size() != 2) {
      throw Error(ErrorCode::kSchemaError, "each link must be a [source, target] pair");
    }
    const std::size_t s = AsIndex(link[0], "link source");
    const std::size_t t = AsIndex(link[1], "link target");
    if (s >= mt.source_words.size() || t >= mt.target_words.size()) {
      throw Error(ErrorCode::kIndexOutOfBounds,
                  "link (" + std::to_string(s) + "," + std::to_string(t) +
                      ") outside " + std::to_string(mt.source_words.size()) + " source / " +
                      std::to_string(mt.target_words.size()) + " target words");
    }
    mt.links.emplace_back(s, t);
  }
  std::sort(mt.links.begin(), mt.links.end());
  mt.links.erase(std::unique(mt.links.begin(), mt.links.end()), mt.links.end());
  return mt;
}

std::string SerializeMtAlignment(const MtAlignment& alignment) {
  json links = json::array();
  for (const auto& [s, t] : alignment.links) links.push_back(json::array({s, t}));
  return Dump(json{{"source_words", alignment.source_words},
                   {"target_words", alignment.target_words},
                   {"links", links}});
}

TokenContours ParseTokenContours(std::string_view text) {
  const json doc = ParseJson(text);
  TokenContours c;
  c.tokens = StringList(doc, "tokens");
  c.token_word_index = IndexList(doc, "token_word_index");
  c.pitch = NumberList(doc, "pitch");
  c.energy = NumberList(doc, "energy");
  c.duration = NumberList(doc, "duration");
  CheckTokenFields(c.tokens.size(), c.token_word_index.size(), c.pitch.size(),
                   c.energy.size(), c.duration.size());
  CheckNondecreasing(c.token_word_index);
  for (double d : c.duration) {
    if (d < 0.0) throw Error(ErrorCode::kRangeError, "token durations must be >= 0");
  }
  return c;
}

std::string SerializeTokenContours(const TokenContours& contours) {
  return Dump(json{{"tokens", contours.tokens},
                   {"token_word_index", contours.token_word_index},
                   {"pitch", contours.pitch},
                   {"energy", contours.energy},
                   {"duration", contours.duration}});
}

std::vector<StressCue> ParseStressCues(std::string_view text) {
  return ParseCueArray(ParseJson(text));
}

std::string SerializeStressCues(std::span<const StressCue> cues) {
  json arr = json::array();
  for (const auto& c : cues) arr.push_back(CueJson(c));
  return Dump(json{{"cues", arr}});
}

TargetCueSet ParseTargetCues(std::string_view text) {
  const json doc = ParseJson(text);
  TargetCueSet set;
  set.cues = ParseCueArray(doc);
  set.sources.resize(set.cues.size());
  const json& arr = Array(doc, "cues");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (arr[i].contains("sources")) set.sources[i] = IndexList(arr[i], "sources");
  }
  if (doc.contains("unmapped_sources")) {
    set.unmapped_sources = IndexList(doc, "unmapped_sources");
  }
  return set;
}

std::string SerializeTargetCues(const TargetCueSet& set) {
  json arr = json::array();
  for (std::size_t i = 0; i < set.cues.size(); ++i) {
    json cue = CueJson(set.cues[i]);
    if (i < set.sources.size()) cue["sources"] = set.sources[i];
    arr.push_back(std::move(cue));
  }
  return Dump(json{{"cues", arr}, {"unmapped_sources", set.unmapped_sources}});
}

GoldLabels ParseGoldLabels(std::string_view text) {
  const json doc = ParseJson(text);
  GoldLabels g;
  g.audio_id = String(doc, "audio_id");
  if (doc.contains("speaker")) g.speaker = String(doc, "speaker");
  for (const json& v : Array(doc, "frame_labels")) {
    if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
      throw Error(ErrorCode::kSchemaError, "frame_labels must hold 0 or 1");
    }
    g.frame_labels.push_back(v.get<int>());
  }
  for (const json& r : Array(doc, "gold_regions")) g.gold_regions.push_back(ParseRegion(r));
  g.kappa = Number(doc, "kappa");
  return g;
}

std::string SerializeGoldLabels(const GoldLabels& gold) {
  json regions = json::array();
  for (const auto& r : gold.gold_regions) regions.push_back(RegionJson(r));
  json doc{{"audio_id", gold.audio_id},
           {"frame_labels", gold.frame_labels},
           {"gold_regions", regions},
           {"kappa", gold.kappa}};
  if (!gold.speaker.empty()) doc["speaker"] = gold.speaker;
  return Dump(doc);
}

ModifiedContours ParseModifiedContours(std::string_view text) {
  const json doc = ParseJson(text);
  ModifiedContours m;
  m.tokens = StringList(doc, "tokens");
  m.token_word_index = IndexList(doc, "token_word_index");
  m.pitch = NumberList(doc, "pitch");
  m.energy = NumberList(doc, "energy");
  for (const json& d : Array(doc, "duration")) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0) {
      throw Error(ErrorCode::kSchemaError, "modified durations must be nonnegative integers");
    }
    m.duration.push_back(d.get<std::int64_t>());
  }
  CheckTokenFields(m.tokens.size(), m.token_word_index.size(), m.pitch.size(),
                   m.energy.size(), m.duration.size());
  CheckNondecreasing(m.token_word_index);
  for (const json& c : Array(doc, "applied_cues")) m.applied_cues.push_back(ParseCue(c));
  return m;
}

std::string SerializeModifiedContours(const ModifiedContours& contours) {
  json cues = json::array();
  for (const auto& c : contours.applied_cues) cues.push_back(CueJson(c));
  return Dump(json{{"tokens", contours.tokens},
                   {"token_word_index", contours.token_word_index},
                   {"pitch", contours.pitch},
                   {"energy", contours.energy},
                   {"duration", contours.duration},
                   {"applied_cues", cues}});
}

}  // namespace stresskit::io
