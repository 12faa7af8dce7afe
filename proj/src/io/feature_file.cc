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

#include "stresskit/io/feature_file.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "stresskit/error.h"
#include "stresskit/io/digest.h"
#include "stresskit/io/file_util.h"

namespace stresskit::io {
namespace {

constexpr char kMagic[4] = {'S', 'F', 'E', 'A'};

static_assert(std::endian::native == std::endian::little,
              "feature files are written in host order");

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  const auto* b = reinterpret_cast<const std::uint8_t*>(&v);
  out.insert(out.end(), b, b + 4);
}

std::uint32_t GetU32(std::span<const std::uint8_t> bytes, std::size_t offset) {
  std::uint32_t v;
  std::memcpy(&v, bytes.data() + offset, 4);
  return v;
}

std::string DigestFromBytes(std::span<const std::uint8_t> raw) {
  if (std::all_of(raw.begin(), raw.end(), [](std::uint8_t b) { return b == 0; })) {
    return {};
  }
  return ToHex(raw);
}

}  // namespace

std::vector<std::uint8_t> EncodeFeatureMatrix(const FeatureMatrix& matrix) {
  if (matrix.data.size() != matrix.rows * matrix.cols) {
    throw Error(ErrorCode::kSchemaError, "feature data length != rows * cols");
  }
  for (std::size_t i = 0; i < matrix.data.size(); ++i) {
    if (!std::isfinite(matrix.data[i])) {
      throw Error(ErrorCode::kNonFinite,
                  "feature value at row " + std::to_string(i / std::max<std::size_t>(matrix.cols, 1)) +
                      " is not finite");
    }
  }
  Sha256 digest{};
  if (!matrix.config_digest.empty()) digest = Sha256FromHex(matrix.config_digest);

  std::vector<std::uint8_t> out;
  out.reserve(kFeatureHeaderBytes + 4 * matrix.data.size());
  out.insert(out.end(), kMagic, kMagic + 4);
  PutU32(out, kFeatureFileVersion);
  PutU32(out, static_cast<std::uint32_t>(matrix.rows));
  PutU32(out, static_cast<std::uint32_t>(matrix.cols));
  out.insert(out.end(), digest.begin(), digest.end());
  const auto* payload = reinterpret_cast<const std::uint8_t*>(matrix.data.data());
  out.insert(out.end(), payload, payload + 4 * matrix.data.size());
  return out;
}

FeatureMatrix DecodeFeatureMatrix(std::span<const std::uint8_t> bytes,
                                  const std::optional<std::string>& expected_digest) {
  if (bytes.size() < kFeatureHeaderBytes || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(ErrorCode::kMalformedContainer, "missing SFEA header");
  }
  const std::uint32_t version = GetU32(bytes, 4);
  if (version != kFeatureFileVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "feature file version " + std::to_string(version));
  }
  FeatureMatrix m;
  m.rows = GetU32(bytes, 8);
  m.cols = GetU32(bytes, 12);
  m.config_digest = DigestFromBytes(bytes.subspan(16, 32));
  if (expected_digest && *expected_digest != m.config_digest) {
    throw Error(ErrorCode::kDigestMismatch,
                "feature file digest " + m.config_digest + " != expected " +
                    *expected_digest);
  }
  const std::size_t n = m.rows * m.cols;
  if (bytes.size() != kFeatureHeaderBytes + 4 * n) {
    throw Error(ErrorCode::kMalformedContainer, "feature payload size mismatch");
  }
  m.data.resize(n);
  std::memcpy(m.data.data(), bytes.data() + kFeatureHeaderBytes, 4 * n);
  return m;
}

void WriteFeatureMatrix(const FeatureMatrix& matrix, const std::filesystem::path& path) {
  WriteFileAtomic(path, EncodeFeatureMatrix(matrix));
}

FeatureMatrix ReadFeatureMatrix(const std::filesystem::path& path,
                                const std::optional<std::string>& expected_digest) {
  return DecodeFeatureMatrix(ReadBinaryFile(path), expected_digest);
}

std::optional<std::string> PeekFeatureDigest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::uint8_t header[kFeatureHeaderBytes];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (in.gcount() != static_cast<std::streamsize>(sizeof(header)) ||
      std::memcmp(header, kMagic, 4) != 0) {
    return std::nullopt;
  }
  return DigestFromBytes(std::span<const std::uint8_t>(header + 16, 32));
}

}  // namespace stresskit::io
