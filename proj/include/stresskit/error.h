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

#ifndef STRESSKIT_ERROR_H_
#define STRESSKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace stresskit {

enum class ErrorCode {
  kIo,
  kInvalidConfig,
  // io_formats
  kMalformedContainer,
  kUnsupportedEncoding,
  kEmptyAudio,
  kSchemaError,
  kRangeError,
  kDigestMismatch,
  kIndexOutOfBounds,
  kNonFinite,
  // dsp_features
  kWindowEven,
  // annotation
  kUnequalRaterCounts,
  kDegenerateAgreement,
  kTooFewAnnotators,
  // stress_classifier
  kSingleClass,
  kUnderdetermined,
  kLayoutMismatch,
  kLengthMismatch,
  kEmpty,
  kVersionMismatch,
  // word_postprocess
  kGridMismatch,
  kEmptyRange,
  kWordListMismatch,
  // pde_modifier
  kUnknownWordIndex,
  kNegativeDuration,
  kInvalidBounds,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure raised by the toolkit carries one of the codes above so that
// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stresskit

#endif  // STRESSKIT_ERROR_H_
