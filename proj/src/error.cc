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

#include "stresskit/error.h"

namespace stresskit {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kMalformedContainer: return "MalformedContainer";
    case ErrorCode::kUnsupportedEncoding: return "UnsupportedEncoding";
    case ErrorCode::kEmptyAudio: return "EmptyAudio";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kRangeError: return "RangeError";
    case ErrorCode::kDigestMismatch: return "DigestMismatch";
    case ErrorCode::kIndexOutOfBounds: return "IndexOutOfBounds";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kWindowEven: return "WindowEven";
    case ErrorCode::kUnequalRaterCounts: return "UnequalRaterCounts";
    case ErrorCode::kDegenerateAgreement: return "DegenerateAgreement";
    case ErrorCode::kTooFewAnnotators: return "TooFewAnnotators";
    case ErrorCode::kSingleClass: return "SingleClass";
    case ErrorCode::kUnderdetermined: return "Underdetermined";
    case ErrorCode::kLayoutMismatch: return "LayoutMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kGridMismatch: return "GridMismatch";
    case ErrorCode::kEmptyRange: return "EmptyRange";
    case ErrorCode::kWordListMismatch: return "WordListMismatch";
    case ErrorCode::kUnknownWordIndex: return "UnknownWordIndex";
    case ErrorCode::kNegativeDuration: return "NegativeDuration";
    case ErrorCode::kInvalidBounds: return "InvalidBounds";
  }
  return "Unknown";
}

}  // namespace stresskit
