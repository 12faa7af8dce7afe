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

#ifndef STRESSKIT_IO_DIGEST_H_
#define STRESSKIT_IO_DIGEST_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stresskit::io {

using Sha256 = std::array<std::uint8_t, 32>;

Sha256 ComputeSha256(std::span<const std::uint8_t> bytes);
Sha256 ComputeSha256(std::string_view text);

std::string ToHex(std::span<const std::uint8_t> bytes);
// Throws SchemaError unless `hex` is exactly 64 hex digits.
Sha256 Sha256FromHex(std::string_view hex);

std::string Sha256Hex(std::string_view text);

std::string Base64Encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> Base64Decode(std::string_view text);

}  // namespace stresskit::io

#endif  // STRESSKIT_IO_DIGEST_H_
