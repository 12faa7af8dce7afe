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

// Binary feature file:
//
//   offset  size  field
//   0       4     magic "SFEA"
//   4       4     u32 version (1)
//   8       4     u32 rows
//   12      4     u32 cols
//   16      32    config digest (SHA-256; all zero when unset)
//   48      4*rows*cols  little-endian f32, row-major

#ifndef STRESSKIT_IO_FEATURE_FILE_H_
#define STRESSKIT_IO_FEATURE_FILE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stresskit/feature_matrix.h"

namespace stresskit::io {

inline constexpr std::uint32_t kFeatureFileVersion = 1;
inline constexpr std::size_t kFeatureHeaderBytes = 48;

// Rejects non-finite values (NonFinite) and a data/shape mismatch.
std::vector<std::uint8_t> EncodeFeatureMatrix(const FeatureMatrix& matrix);

// When `expected_digest` is given the stored digest must equal it, otherwise
// DigestMismatch is raised.
FeatureMatrix DecodeFeatureMatrix(
    std::span<const std::uint8_t> bytes,
    const std::optional<std::string>& expected_digest = std::nullopt);

void WriteFeatureMatrix(const FeatureMatrix& matrix,
                        const std::filesystem::path& path);
FeatureMatrix ReadFeatureMatrix(
    const std::filesystem::path& path,
    const std::optional<std::string>& expected_digest = std::nullopt);

// Reads only the header's digest; used to skip unchanged outputs.
std::optional<std::string> PeekFeatureDigest(const std::filesystem::path& path);

}  // namespace stresskit::io

#endif  // STRESSKIT_IO_FEATURE_FILE_H_
