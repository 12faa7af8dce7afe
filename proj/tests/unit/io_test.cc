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

#include <cmath>
#include <cstring>
#include <limits>

#include "doctest.h"
#include "stresskit/io/digest.h"
#include "stresskit/io/documents.h"
#include "stresskit/io/feature_file.h"
#include "stresskit/io/file_util.h"
#include "stresskit/io/wav.h"
#include "test_util.h"

namespace stresskit::io {
namespace {

using testing::TempDir;

void PutU32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void PutU16(std::vector<std::uint8_t>& b, std::uint16_t v) {
  b.push_back(static_cast<std::uint8_t>(v));
  b.push_back(static_cast<std::uint8_t>(v >> 8));
}
void PutTag(std::vector<std::uint8_t>& b, const char* tag) { b.insert(b.end(), tag, tag + 4); }

// Hand-assembled RIFF/WAVE with an arbitrary fmt chunk and sample payload.
std::vector<std::uint8_t> RawWav(std::uint16_t format, std::uint16_t channels,
                                 std::uint32_t rate, std::uint16_t bits,
                                 const std::vector<std::uint8_t>& payload) {
  std::vector<std::uint8_t> b;
  PutTag(b, "RIFF");
  PutU32(b, static_cast<std::uint32_t>(4 + 8 + 16 + 8 + payload.size()));
  PutTag(b, "WAVE");
  PutTag(b, "fmt ");
  PutU32(b, 16);
  PutU16(b, format);
  PutU16(b, channels);
  PutU32(b, rate);
  PutU32(b, rate * channels * bits / 8);
  PutU16(b, static_cast<std::uint16_t>(channels * bits / 8));
  PutU16(b, bits);
  PutTag(b, "data");
  PutU32(b, static_cast<std::uint32_t>(payload.size()));
  b.insert(b.end(), payload.begin(), payload.end());
  return b;
}

TEST_CASE("SHA-256 and base64 match published test vectors") {
  CHECK(Sha256Hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(Sha256Hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  const std::string man = "Man";
  const std::vector<std::uint8_t> bytes(man.begin(), man.end());
  CHECK(Base64Encode(bytes) == "TWFu");
  CHECK(Base64Decode("TWFu") == bytes);
  const std::vector<std::uint8_t> two = {'M', 'a'};
  CHECK(Base64Encode(two) == "TWE=");
  CHECK(Base64Decode("TWE=") == two);
  CHECK(Base64Decode(Base64Encode({})).empty());
}

TEST_CASE("hex digests round trip and reject malformed text") {
  const std::string hex = Sha256Hex("stress");
  CHECK(ToHex(Sha256FromHex(hex)) == hex);
  CHECK_ERROR_CODE(Sha256FromHex("abc"), ErrorCode::kSchemaError);
  CHECK_ERROR_CODE(Sha256FromHex(std::string(64, 'g')), ErrorCode::kSchemaError);
}

TEST_CASE("WAV float32 round trip is exact") {
  AudioBuffer audio{{0.0, 0.25, -0.5, 0.125, 1.0}, 16000, "a"};
  const AudioBuffer back = DecodeWav(EncodeWav(audio, WavEncoding::kFloat32), "a");
  CHECK(back.sample_rate == 16000);
  CHECK(back.samples == audio.samples);
}

TEST_CASE("WAV PCM16 round trip within one quantization step") {
  AudioBuffer audio{{0.0, 0.3, -0.7, 0.999}, 8000, "b"};
  const AudioBuffer back = DecodeWav(EncodeWav(audio, WavEncoding::kPcm16));
  REQUIRE(back.samples.size() == audio.samples.size());
  for (std::size_t i = 0; i < audio.samples.size(); ++i) {
    CHECK(std::abs(back.samples[i] - audio.samples[i]) <= 1.0 / 32768.0);
  }
}

TEST_CASE("stereo PCM16 is averaged to mono") {
  std::vector<std::uint8_t> payload;
  PutU16(payload, static_cast<std::uint16_t>(16384));                   // L = 0.5
  PutU16(payload, static_cast<std::uint16_t>(static_cast<int16_t>(0))); // R = 0
  PutU16(payload, static_cast<std::uint16_t>(static_cast<int16_t>(-32768)));
  PutU16(payload, static_cast<std::uint16_t>(static_cast<int16_t>(-32768)));
  const AudioBuffer a = DecodeWav(RawWav(1, 2, 16000, 16, payload));
  REQUIRE(a.samples.size() == 2);
  CHECK(a.samples[0] == doctest::Approx(0.25));
  CHECK(a.samples[1] == doctest::Approx(-1.0));
}

TEST_CASE("WAV decoding errors") {
  CHECK_ERROR_CODE(DecodeWav(std::vector<std::uint8_t>{1, 2, 3}), ErrorCode::kMalformedContainer);
  CHECK_ERROR_CODE(DecodeWav(RawWav(1, 1, 16000, 8, {1, 2, 3})), ErrorCode::kUnsupportedEncoding);
  CHECK_ERROR_CODE(DecodeWav(RawWav(1, 1, 16000, 16, {})), ErrorCode::kEmptyAudio);
  std::vector<std::uint8_t> nan_payload(4);
  const float nan = std::numeric_limits<float>::quiet_NaN();
  std::memcpy(nan_payload.data(), &nan, 4);
  CHECK_ERROR_CODE(DecodeWav(RawWav(3, 1, 16000, 32, nan_payload)), ErrorCode::kNonFinite);
}

TEST_CASE("WAV file helpers name the buffer after the file stem") {
  TempDir dir;
  WriteWav(dir.path() / "hello.wav", AudioBuffer{{0.1, 0.2}, 16000, ""});
  const AudioBuffer a = ReadWav(dir.path() / "hello.wav");
  CHECK(a.audio_id == "hello");
  CHECK(a.samples.size() == 2);
}

FeatureMatrix SmallMatrix() {
  FeatureMatrix m;
  m.rows = 3;
  m.cols = 2;
  m.data = {1.5f, -2.0f, 0.1f, 3.25f, 1e-7f, -0.0f};
  m.config_digest = Sha256Hex("cfg");
  return m;
}

TEST_CASE("feature file round trip is bit exact") {
  const FeatureMatrix m = SmallMatrix();
  const auto bytes = EncodeFeatureMatrix(m);
  CHECK(bytes.size() == kFeatureHeaderBytes + 4 * 6);
  CHECK(std::memcmp(bytes.data(), "SFEA", 4) == 0);
  const FeatureMatrix back = DecodeFeatureMatrix(bytes, m.config_digest);
  CHECK(back.rows == 3);
  CHECK(back.cols == 2);
  CHECK(back.config_digest == m.config_digest);
  CHECK(std::memcmp(back.data.data(), m.data.data(), 4 * 6) == 0);
}

TEST_CASE("feature file errors") {
  FeatureMatrix m = SmallMatrix();
  auto bytes = EncodeFeatureMatrix(m);
  CHECK_ERROR_CODE(DecodeFeatureMatrix(bytes, Sha256Hex("other")), ErrorCode::kDigestMismatch);
  auto bad_version = bytes;
  bad_version[4] = 9;
  CHECK_ERROR_CODE(DecodeFeatureMatrix(bad_version), ErrorCode::kVersionMismatch);
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_ERROR_CODE(DecodeFeatureMatrix(bad_magic), ErrorCode::kMalformedContainer);
  auto truncated = bytes;
  truncated.pop_back();
  CHECK_ERROR_CODE(DecodeFeatureMatrix(truncated), ErrorCode::kMalformedContainer);
  m.data[2] = std::numeric_limits<float>::infinity();
  CHECK_ERROR_CODE(EncodeFeatureMatrix(m), ErrorCode::kNonFinite);
}

TEST_CASE("feature files on disk and digest peeking") {
  TempDir dir;
  const FeatureMatrix m = SmallMatrix();
  WriteFeatureMatrix(m, dir.path() / "x.sfea");
  CHECK(PeekFeatureDigest(dir.path() / "x.sfea") == m.config_digest);
  CHECK(ReadFeatureMatrix(dir.path() / "x.sfea").data == m.data);
  CHECK_FALSE(PeekFeatureDigest(dir.path() / "missing.sfea").has_value());
}

TEST_CASE("ListFiles filters by extension and sorts") {
  TempDir dir;
  WriteFileAtomic(dir.path() / "b.json", "{}");
  WriteFileAtomic(dir.path() / "a.json", "{}");
  WriteFileAtomic(dir.path() / "c.txt", "x");
  const auto files = ListFiles(dir.path(), ".json");
  REQUIRE(files.size() == 2);
  CHECK(files[0].filename() == "a.json");
  CHECK(files[1].filename() == "b.json");
  CHECK_ERROR_CODE(ListFiles(dir.path() / "nope", ".json"), ErrorCode::kIo);
}

TEST_CASE("annotation documents round trip and validate regions") {
  AnnotationSet set{"u1", "spk", 16000, 2.0, {{"a", {{0.1, 0.4}}}, {"b", {}}}};
  CHECK(ParseAnnotationSet(SerializeAnnotationSet(set)) == set);
  CHECK_ERROR_CODE(ParseAnnotationSet(R"({"audio_id":"u","sample_rate":16000,"duration_s":1.0,
      "annotations":[{"annotator_id":"a","regions":[{"start_s":0.5,"end_s":0.2}]}]})"),
                   ErrorCode::kRangeError);
  CHECK_ERROR_CODE(ParseAnnotationSet(R"({"audio_id":"u","sample_rate":16000,"duration_s":1.0,
      "annotations":[{"annotator_id":"a","regions":[{"start_s":0.5,"end_s":1.2}]}]})"),
                   ErrorCode::kRangeError);
  CHECK_ERROR_CODE(ParseAnnotationSet(R"({"audio_id":"u"})"), ErrorCode::kSchemaError);
  CHECK_ERROR_CODE(ParseAnnotationSet("not json"), ErrorCode::kSchemaError);
}

TEST_CASE("word, MT, contour and cue documents round trip") {
  WordAlignment words{"u1", {{"hello", 0.1, 0.4}, {"there", 0.5, 0.9}}};
  CHECK(ParseWordAlignment(SerializeWordAlignment(words)) == words);

  MtAlignment mt{{"a", "b"}, {"x", "y", "z"}, {{0, 1}, {1, 0}, {1, 2}}};
  CHECK(ParseMtAlignment(SerializeMtAlignment(mt)) == mt);
  CHECK_ERROR_CODE(ParseMtAlignment(R"({"source_words":["a"],"target_words":["x"],"links":[[0,3]]})"),
                   ErrorCode::kIndexOutOfBounds);
  const MtAlignment sorted = ParseMtAlignment(
      R"({"source_words":["a","b"],"target_words":["x","y"],"links":[[1,0],[0,1],[1,0]]})");
  CHECK(sorted.links == std::vector<AlignmentLink>{{0, 1}, {1, 0}});

  TokenContours tc{{"a", "b", "c"}, {0, 0, 1}, {1.0, 2.0, 3.0}, {0.5, 0.5, 0.5}, {2.0, 3.5, 0.0}};
  CHECK(ParseTokenContours(SerializeTokenContours(tc)) == tc);
  CHECK_ERROR_CODE(ParseTokenContours(R"({"tokens":["a","b"],"token_word_index":[1,0],
      "pitch":[1,1],"energy":[1,1],"duration":[1,1]})"),
                   ErrorCode::kSchemaError);

  std::vector<StressCue> cues{{2, "w", 1.5, 1.2, 1.0}};
  CHECK(ParseStressCues(SerializeStressCues(cues)) == cues);

  TargetCueSet target{{{5, "t", 1.4, 1.1, 1.0}}, {{1, 2}}, {4}};
  CHECK(ParseTargetCues(SerializeTargetCues(target)) == target);
  CHECK(ParseStressCues(SerializeTargetCues(target)) == target.cues);

  GoldLabels gold{"u1", "spk", {0, 1, 1, 0}, {{0.1, 0.2}}, 0.75};
  CHECK(ParseGoldLabels(SerializeGoldLabels(gold)) == gold);

  ModifiedContours mc{{"a"}, {0}, {2.0}, {0.5}, {4}, cues};
  CHECK(ParseModifiedContours(SerializeModifiedContours(mc)) == mc);
}

}  // namespace
}  // namespace stresskit::io
