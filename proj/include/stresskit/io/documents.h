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

// JSON codecs for every structured-text artifact exchanged between stages.
// Parsers validate the documented invariants and raise SchemaError for a
// missing or mistyped field, RangeError for an invalid interval and
// IndexOutOfBounds for an index past its list.

#ifndef STRESSKIT_IO_DOCUMENTS_H_
#define STRESSKIT_IO_DOCUMENTS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stresskit/types.h"

namespace stresskit::io {

AnnotationSet ParseAnnotationSet(std::string_view text);
std::string SerializeAnnotationSet(const AnnotationSet& set);

WordAlignment ParseWordAlignment(std::string_view text);
std::string SerializeWordAlignment(const WordAlignment& alignment);

// Links are returned sorted and de-duplicated.
MtAlignment ParseMtAlignment(std::string_view text);
std::string SerializeMtAlignment(const MtAlignment& alignment);

TokenContours ParseTokenContours(std::string_view text);
std::string SerializeTokenContours(const TokenContours& contours);

std::vector<StressCue> ParseStressCues(std::string_view text);
std::string SerializeStressCues(std::span<const StressCue> cues);

// Same "cues" schema, plus a top-level "unmapped_sources" list. Parsing a
// target document with ParseStressCues ignores the extra key.
TargetCueSet ParseTargetCues(std::string_view text);
std::string SerializeTargetCues(const TargetCueSet& set);

GoldLabels ParseGoldLabels(std::string_view text);
std::string SerializeGoldLabels(const GoldLabels& gold);

// Token-contours schema (with integer durations) plus "applied_cues".
ModifiedContours ParseModifiedContours(std::string_view text);
std::string SerializeModifiedContours(const ModifiedContours& contours);

}  // namespace stresskit::io

#endif  // STRESSKIT_IO_DOCUMENTS_H_
