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

#include "stresskit/io/wav.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <optional>

#include "stresskit/error.h"
#include "stresskit/io/file_util.h"

namespace stresskit::io {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

static_assert(std::endian::native == std::endian::little,
              "WAV codec assumes a little-endian host");

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::size_t pos() const { return pos_; }

  void Need(std::size_t n) const {
    if (remaining() < n) {
      throw Error(ErrorCode::kMalformedContainer, "truncated WAV data");
    }
  }
  std::uint16_t U16() {
    Need(2);
    std::uint16_t v;
    std::memcpy(&v, bytes_.data() + pos_, 2);
    pos_ += 2;
    return v;
  }
  std::uint32_t U32() {
    Need(4);
    std::uint32_t v;
    std::memcpy(&v, bytes_.data() + pos_, 4);
    pos_ += 4;
    return v;
  }
  std::string Tag() {
    Need(4);
    std::string tag(reinterpret_cast<const char*>(bytes_.data() + pos_), 4);
    pos_ += 4;
    return tag;
  }
  void Skip(std::size_t n) {
    Need(n);
    pos_ += n;
  }
  std::span<const std::uint8_t> Take(std::size_t n) {
    Need(n);
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

FormatChunk ParseFormat(std::span<const std::uint8_t> body) {
  ByteReader r(body);
  if (body.size() < 16) {
    throw Error(ErrorCode::kMalformedContainer, "fmt chunk shorter than 16 bytes");
  }
  FormatChunk fmt;
  fmt.format = r.U16();
  fmt.channels = r.U16();
  fmt.sample_rate = r.U32();
  r.Skip(4);  // byte rate
  r.Skip(2);  // block align
  fmt.bits_per_sample = r.U16();
  if (fmt.format == kFormatExtensible) {
    // cbSize, valid bits, channel mask, then the sub-format GUID whose first
    // two bytes carry the actual format tag.
    if (body.size() < 40) {
      throw Error(ErrorCode::kMalformedContainer, "short WAVE_FORMAT_EXTENSIBLE chunk");
    }
    r.Skip(2 + 2 + 4);
    fmt.format = r.U16();
  }
  return fmt;
}

}  // namespace

AudioBuffer DecodeWav(std::span<const std::uint8_t> bytes, std::string audio_id) {
  ByteReader r(bytes);
  if (bytes.size() < 12 || r.Tag() != "RIFF") {
    throw Error(ErrorCode::kMalformedContainer, "missing RIFF header");
  }
  r.U32();  // riff size; often wrong in the wild, so not trusted
  if (r.Tag() != "WAVE") {
    throw Error(ErrorCode::kMalformedContainer, "RIFF form type is not WAVE");
  }

  std::optional<FormatChunk> fmt;
  std::optional<std::span<const std::uint8_t>> data;
  while (r.remaining() >= 8) {
    const std::string tag = r.Tag();
    std::uint32_t size = r.U32();
    if (tag == "data" && size > r.remaining()) {
      size = static_cast<std::uint32_t>(r.remaining());  // truncated stream
    }
    auto body = r.Take(size);
    if (size % 2 == 1 && r.remaining() > 0) r.Skip(1);
    if (tag == "fmt ") {
      fmt = ParseFormat(body);
    } else if (tag == "data") {
      data = body;
    }
  }
  if (!fmt) throw Error(ErrorCode::kMalformedContainer, "no fmt chunk");
  if (!data) throw Error(ErrorCode::kMalformedContainer, "no data chunk");
  if (fmt->channels == 0 || fmt->sample_rate == 0) {
    throw Error(ErrorCode::kMalformedContainer, "zero channels or sample rate");
  }

  const bool pcm16 = fmt->format == kFormatPcm && fmt->bits_per_sample == 16;
  const bool float32 = fmt->format == kFormatFloat && fmt->bits_per_sample == 32;
  if (!pcm16 && !float32) {
    throw Error(ErrorCode::kUnsupportedEncoding,
                "format tag " + std::to_string(fmt->format) + " with " +
                    std::to_string(fmt->bits_per_sample) +
                    " bits per sample (need 16-bit PCM or 32-bit float)");
  }

  const std::size_t bytes_per_sample = fmt->bits_per_sample / 8;
  const std::size_t frame_bytes = bytes_per_sample * fmt->channels;
  const std::size_t n_frames = data->size() / frame_bytes;
  if (n_frames == 0) throw Error(ErrorCode::kEmptyAudio, "data chunk holds no samples");

  AudioBuffer audio;
  audio.audio_id = std::move(audio_id);
  audio.sample_rate = static_cast<int>(fmt->sample_rate);
  audio.samples.resize(n_frames);
  const std::uint8_t* p = data->data();
  for (std::size_t i = 0; i < n_frames; ++i) {
    double sum = 0.0;
    for (std::size_t c = 0; c < fmt->channels; ++c) {
      if (pcm16) {
        std::int16_t s;
        std::memcpy(&s, p, 2);
        sum += static_cast<double>(s) / 32768.0;
      } else {
        float s;
        std::memcpy(&s, p, 4);
        if (!std::isfinite(s)) {
          throw Error(ErrorCode::kNonFinite,
                      "non-finite float sample at frame " + std::to_string(i));
        }
        sum += static_cast<double>(s);
      }
      p += bytes_per_sample;
    }
    audio.samples[i] = sum / fmt->channels;
  }
  return audio;
}

AudioBuffer ReadWav(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = ReadBinaryFile(path);
  return DecodeWav(bytes, path.stem().string());
}

std::vector<std::uint8_t> EncodeWav(const AudioBuffer& audio, WavEncoding encoding) {
  if (audio.sample_rate <= 0) {
    throw Error(ErrorCode::kInvalidConfig, "sample rate must be positive");
  }
  const std::uint16_t bits = encoding == WavEncoding::kPcm16 ? 16 : 32;
  const std::uint16_t format = encoding == WavEncoding::kPcm16 ? kFormatPcm : kFormatFloat;
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(audio.samples.size() * (bits / 8));

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  auto put = [&out](const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    out.insert(out.end(), b, b + n);
  };
  auto put16 = [&put](std::uint16_t v) { put(&v, 2); };
  auto put32 = [&put](std::uint32_t v) { put(&v, 4); };

  put("RIFF", 4);
  put32(36 + data_bytes);
  put("WAVE", 4);
  put("fmt ", 4);
  put32(16);
  put16(format);
  put16(1);
  put32(static_cast<std::uint32_t>(audio.sample_rate));
  put32(static_cast<std::uint32_t>(audio.sample_rate) * (bits / 8));
  put16(bits / 8);
  put16(bits);
  put("data", 4);
  put32(data_bytes);
  for (double s : audio.samples) {
    if (encoding == WavEncoding::kPcm16) {
      const double scaled = std::round(std::clamp(s, -1.0, 1.0) * 32768.0);
      const auto v = static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
      put(&v, 2);
    } else {
      const auto v = static_cast<float>(s);
      put(&v, 4);
    }
  }
  return out;
}

void WriteWav(const std::filesystem::path& path, const AudioBuffer& audio,
              WavEncoding encoding) {
  WriteFileAtomic(path, EncodeWav(audio, encoding));
}

}  // namespace stresskit::io
