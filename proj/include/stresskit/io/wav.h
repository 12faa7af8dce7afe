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

#ifndef STRESSKIT_IO_WAV_H_
#define STRESSKIT_IO_WAV_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "stresskit/types.h"

namespace stresskit::io {

enum class WavEncoding { kPcm16, kFloat32 };

// Decodes a RIFF/WAVE container holding 16-bit PCM or 32-bit IEEE float
// samples. Channels are averaged to mono and integer samples are scaled by
// 1/32768. No resampling is done.
AudioBuffer DecodeWav(std::span<const std::uint8_t> bytes,
                      std::string audio_id = {});

// audio_id defaults to the file stem.
AudioBuffer ReadWav(const std::filesystem::path& path);

std::vector<std::uint8_t> EncodeWav(const AudioBuffer& audio,
                                    WavEncoding encoding = WavEncoding::kFloat32);

void WriteWav(const std::filesystem::path& path, const AudioBuffer& audio,
              WavEncoding encoding = WavEncoding::kFloat32);

}  // namespace stresskit::io

#endif  // STRESSKIT_IO_WAV_H_
