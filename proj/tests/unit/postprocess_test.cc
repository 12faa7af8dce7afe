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
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "stresskit/cue_transfer.h"
#include "stresskit/pde_modifier.h"
#include "stresskit/word_postprocess.h"
#include "test_util.h"

namespace stresskit {
namespace {

const dsp::FrameConfig kGrid;

TEST_CASE("frames for a word use centers in [start, end)") {
  CHECK(FramesForWord({"w", 0.4, 0.6}, kGrid, 59) == FrameRange{23, 36});
  CHECK(FramesForWord({"w", 0.0, 1.0}, kGrid, 59) == FrameRange{0, 59});
  // Between the centers 0.032 and 0.048.
  CHECK(FramesForWord({"w", 0.035, 0.045}, kGrid, 59).empty());
  CHECK(FramesForWord({"w", 0.032, 0.048}, kGrid, 59) == FrameRange{0, 1});
  CHECK(FramesForWord({"w", 5.0, 6.0}, kGrid, 59).empty());
}

WordAlignment TenFrameWord() {
  // Frames 10 .. 19: centers 0.192 .. 0.336.
  return {"u", {{"w", kGrid.CenterTime(10), kGrid.CenterTime(20)}}};
}

TEST_CASE("strict majority decides word stress") {
  Labels preds(40, 0);
  for (int t = 10; t < 17; ++t) preds[t] = 1;
  auto d = WordLevelStress(preds, TenFrameWord(), kGrid, 40);
  REQUIRE(d.size() == 1);
  CHECK(d[0].stressed);
  CHECK(d[0].stressed_frame_fraction == doctest::Approx(0.7));

  preds.assign(40, 0);
  for (int t = 10; t < 15; ++t) preds[t] = 1;
  d = WordLevelStress(preds, TenFrameWord(), kGrid, 40);
  CHECK_FALSE(d[0].stressed);
  CHECK(d[0].stressed_frame_fraction == doctest::Approx(0.5));

  WordAlignment tiny{"u", {{"x", 0.035, 0.045}}};
  d = WordLevelStress(Labels(40, 1), tiny, kGrid, 40);
  CHECK_FALSE(d[0].stressed);
  CHECK(d[0].stressed_frame_fraction == 0.0);

  CHECK_ERROR_CODE(WordLevelStress(Labels(39, 0), TenFrameWord(), kGrid, 40), ErrorCode::kGridMismatch);
}

TEST_CASE("word stress matches a brute-force membership counter") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const double span = kGrid.CenterTime(n) + 0.05;
    Labels preds(n);
    for (auto& p : preds) p = static_cast<int>(rng() % 2);
    WordAlignment words{"u", {}};
    std::vector<std::pair<double, double>> intervals;
    const int count = 1 + static_cast<int>(rng() % 20);
    for (int w = 0; w < count; ++w) {
      double a = span * u(rng), b = span * u(rng);
      if (a > b) std::swap(a, b);
      words.words.push_back({"w", a, b});
      intervals.push_back({a, b});
    }
    const auto got = WordLevelStress(preds, words, kGrid, n);
    const auto want = oracle::NaiveWordStress(preds, intervals, 1024, 256, 16000);
    for (std::size_t w = 0; w < got.size(); ++w) {
      CHECK(got[w].stressed == want[w].stressed);
      CHECK(got[w].stressed_frame_fraction == doctest::Approx(want[w].fraction));
    }
  }
}

TEST_CASE("word decisions ignore frames outside words and are monotone") {
  Labels preds(40, 0);
  for (int t = 10; t < 16; ++t) preds[t] = 1;
  const auto base = WordLevelStress(preds, TenFrameWord(), kGrid, 40);
  Labels outside = preds;
  for (int t = 0; t < 10; ++t) outside[t] = 1;
  CHECK(WordLevelStress(outside, TenFrameWord(), kGrid, 40) == base);
  preds[18] = 1;
  CHECK(WordLevelStress(preds, TenFrameWord(), kGrid, 40)[0].stressed);
}

TEST_CASE("scaling factors are clamped mean ratios") {
  std::vector<double> f0(30, 100.0), energy(30, 0.2);
  for (int t = 10; t < 20; ++t) f0[t] = 150.0;
  f0[0] = 0.0;  // unvoiced frames are ignored
  f0[12] = 0.0;
  Scales s = ComputeScalingFactors(f0, energy, {10, 20});
  CHECK(std::abs(s.pitch - 1.5) < 1e-9);
  CHECK(s.energy == doctest::Approx(1.0));
  CHECK(s.duration == 1.0);

  for (int t = 10; t < 20; ++t) energy[t] = 0.9;
  for (int t = 10; t < 20; ++t) f0[t] = 300.0;
  s = ComputeScalingFactors(f0, energy, {10, 20});
  CHECK(s.pitch == 2.0);
  CHECK(s.energy == 2.0);

  for (int t = 10; t < 20; ++t) energy[t] = 0.02;
  s = ComputeScalingFactors(f0, energy, {10, 20});
  CHECK(s.energy == 0.5);

  ScalingConfig cfg;
  cfg.duration_scale = 1.3;
  CHECK(ComputeScalingFactors(f0, energy, {10, 20}, cfg).duration == 1.3);

  const std::vector<double> silent(30, 0.0);
  s = ComputeScalingFactors(silent, silent, {10, 20});
  CHECK(s.pitch == 1.0);
  CHECK(s.energy == 1.0);
  CHECK(ComputeScalingFactors(f0, energy, {0, 30}).pitch == 1.0);
  CHECK_ERROR_CODE(ComputeScalingFactors(f0, energy, {5, 5}), ErrorCode::kEmptyRange);
}

TEST_CASE("scaling factors are invariant to a global contour scale") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(80.0, 200.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> f0(50), energy(50);
    for (int t = 0; t < 50; ++t) {
      f0[t] = rng() % 5 == 0 ? 0.0 : u(rng);
      energy[t] = u(rng) / 1000.0;
    }
    const FrameRange range{10 + rng() % 10, 25 + rng() % 10};
    const Scales a = ComputeScalingFactors(f0, energy, range);
    const double alpha = 0.1 + 5.0 * (rng() % 100) / 100.0;
    for (auto& v : f0) v *= alpha;
    for (auto& v : energy) v *= alpha;
    const Scales b = ComputeScalingFactors(f0, energy, range);
    CHECK(std::abs(a.pitch - b.pitch) < 1e-9);
    CHECK(std::abs(a.energy - b.energy) < 1e-9);
    CHECK(a.pitch >= 0.5);
    CHECK(a.pitch <= 2.0);
  }
}

TEST_CASE("cues for stressed words") {
  std::vector<double> f0(40, 100.0), energy(40, 0.1);
  for (int t = 10; t < 20; ++t) {
    f0[t] = 150.0;
    energy[t] = 0.14;
  }
  const WordAlignment words{"u", {{"a", 0.0, kGrid.CenterTime(10)}, TenFrameWord().words[0]}};
  Labels preds(40, 0);
  for (int t = 10; t < 20; ++t) preds[t] = 1;
  const auto decisions = WordLevelStress(preds, words, kGrid, 40);
  const auto cues = CuesForStressedWords(decisions, words, f0, energy, kGrid);
  REQUIRE(cues.size() == 1);
  CHECK(cues[0].word_index == 1);
  CHECK(cues[0].pitch_scale == doctest::Approx(1.5));
  CHECK(cues[0].energy_scale == doctest::Approx(1.4));
}

TEST_CASE("post accuracy") {
  std::vector<WordStressDecision> gold, pred;
  for (std::size_t i = 0; i < 10; ++i) {
    gold.push_back({i, "w", i < 3, 0.0});
    pred.push_back({i, "w", i < 3, 0.0});
  }
  CHECK(PostAccuracy(pred, gold) == 1.0);
  pred[0].stressed = false;
  pred[7].stressed = true;
  CHECK(PostAccuracy(pred, gold) == doctest::Approx(0.8));
  pred.pop_back();
  CHECK_ERROR_CODE(PostAccuracy(pred, gold), ErrorCode::kWordListMismatch);
  CHECK_ERROR_CODE(PostAccuracy({}, {}), ErrorCode::kEmpty);
}

TEST_CASE("majority filtering removes isolated false positives") {
  // Three 10-frame words, gold: only the middle one stressed.
  const WordAlignment words{"u", {{"a", kGrid.CenterTime(0), kGrid.CenterTime(10)},
                                  {"b", kGrid.CenterTime(10), kGrid.CenterTime(20)},
                                  {"c", kGrid.CenterTime(20), kGrid.CenterTime(30)}}};
  Labels gold(30, 0), pred(30, 0);
  for (int t = 10; t < 20; ++t) gold[t] = pred[t] = 1;
  pred[2] = pred[5] = pred[23] = pred[27] = 1;  // isolated positives
  pred[14] = 0;
  int frame_agree = 0;
  for (int t = 0; t < 30; ++t) frame_agree += gold[t] == pred[t];
  const double frame_acc = frame_agree / 30.0;
  const double post = PostAccuracy(WordLevelStress(pred, words, kGrid, 30),
                                   WordLevelStress(gold, words, kGrid, 30));
  CHECK(post == 1.0);
  CHECK(post > frame_acc);
}

TEST_CASE("cue transfer copies, fans out and max-merges") {
  MtAlignment mt{{"s0", "s1", "s2", "s3"}, {"t0", "t1", "t2", "t3", "t4", "t5"}, {{2, 5}}};
  CHECK(MapCues({}, mt).cues.empty());

  const StressCue c2{2, "s2", 1.3, 1.1, 1.0};
  TargetCueSet r = MapCues({c2}, mt);
  REQUIRE(r.cues.size() == 1);
  CHECK(r.cues[0] == StressCue{5, "t5", 1.3, 1.1, 1.0});
  CHECK(r.sources[0] == std::vector<std::size_t>{2});

  mt.links = {{1, 3}, {2, 3}};
  r = MapCues({{1, "s1", 1.4, 1.0, 1.0}, {2, "s2", 1.2, 1.3, 1.1}}, mt);
  REQUIRE(r.cues.size() == 1);
  CHECK(r.cues[0].pitch_scale == 1.4);
  CHECK(r.cues[0].energy_scale == 1.3);
  CHECK(r.cues[0].duration_scale == 1.1);
  CHECK(r.sources[0] == std::vector<std::size_t>{1, 2});

  mt.links = {{0, 1}, {0, 4}};
  r = MapCues({{0, "s0", 1.5, 1.2, 1.0}, {3, "s3", 1.1, 1.1, 1.0}}, mt);
  REQUIRE(r.cues.size() == 2);
  CHECK(r.cues[0].word_index == 1);
  CHECK(r.cues[1].word_index == 4);
  CHECK(r.unmapped_sources == std::vector<std::size_t>{3});

  CHECK_ERROR_CODE(MapCues({{9, "x", 1, 1, 1}}, mt), ErrorCode::kIndexOutOfBounds);
  mt.links = {{0, 9}};
  CHECK_ERROR_CODE(MapCues({}, mt), ErrorCode::kIndexOutOfBounds);
}

TEST_CASE("cue transfer invariants on random alignments") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ns = 1 + rng() % 12, nt = 1 + rng() % 12;
    MtAlignment mt;
    for (std::size_t i = 0; i < ns; ++i) mt.source_words.push_back("s" + std::to_string(i));
    for (std::size_t i = 0; i < nt; ++i) mt.target_words.push_back("t" + std::to_string(i));
    for (std::size_t l = rng() % 15; l > 0; --l) mt.links.emplace_back(rng() % ns, rng() % nt);
    std::vector<StressCue> cues;
    for (std::size_t i = 0; i < ns; ++i) {
      if (rng() % 2) cues.push_back({i, mt.source_words[i], 1.0 + (rng() % 10) / 10.0, 1.0, 1.0});
    }
    const TargetCueSet r = MapCues(cues, mt);
    std::set<std::size_t> accounted(r.unmapped_sources.begin(), r.unmapped_sources.end());
    std::set<std::size_t> targets;
    for (std::size_t i = 0; i < r.cues.size(); ++i) {
      accounted.insert(r.sources[i].begin(), r.sources[i].end());
      CHECK(targets.insert(r.cues[i].word_index).second);
    }
    for (const auto& c : cues) CHECK(accounted.contains(c.word_index));
    auto shuffled = mt;
    std::shuffle(shuffled.links.begin(), shuffled.links.end(), rng);
    CHECK(MapCues(cues, shuffled) == r);

    MtAlignment identity;
    identity.source_words = mt.source_words;
    identity.target_words = mt.source_words;
    for (std::size_t i = 0; i < ns; ++i) identity.links.emplace_back(i, i);
    CHECK(MapCues(cues, identity).cues == cues);
  }
}

TokenContours SampleContours() {
  return {{"a", "b", "c", "d"}, {0, 0, 1, 2}, {2.0, 1.0, 3.0, 4.0}, {0.5, 0.7, 0.1, 0.2},
          {4.0, 2.5, 0.0, 0.2}};
}

TEST_CASE("PDE modifier worked example and identity") {
  const TokenContours tc = SampleContours();
  const ModifiedContours m = ApplyCues(tc, std::vector<StressCue>{{0, "w0", 1.5, 1.2, 1.25}});
  CHECK(m.pitch[0] == 3.0);
  CHECK(m.energy[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(m.duration[0] == 5);
  CHECK(m.pitch[2] == tc.pitch[2]);
  CHECK(m.energy[3] == tc.energy[3]);
  CHECK(m.duration[2] == 0);
  CHECK(m.duration[3] == 1);  // 0.2 rounds to 0 but a spoken token keeps one frame
  CHECK(m.applied_cues.size() == 1);

  const ModifiedContours id = ApplyCues(tc, std::vector<StressCue>{});
  CHECK(id.pitch == tc.pitch);
  CHECK(id.energy == tc.energy);
  CHECK(id.duration == std::vector<std::int64_t>{4, 3, 0, 1});

  const ModifiedContours unit = ApplyCues(tc, std::vector<StressCue>{{1, "w1", 1.0, 1.0, 1.0}});
  CHECK(unit.pitch == tc.pitch);
  CHECK(unit.energy == tc.energy);

  CHECK_ERROR_CODE(ApplyCues(tc, std::vector<StressCue>{{7, "w7", 1, 1, 1}}), ErrorCode::kUnknownWordIndex);
}

TEST_CASE("duration rounding is half away from zero with a one-frame floor") {
  CHECK(RoundDuration(2.5) == 3);
  CHECK(RoundDuration(3.5) == 4);
  CHECK(RoundDuration(2.4999) == 2);
  CHECK(RoundDuration(0.3) == 1);
  CHECK(RoundDuration(0.0) == 0);
}

TEST_CASE("cues on disjoint words commute") {
  const TokenContours tc = SampleContours();
  const StressCue s{0, "w0", 1.3, 0.9, 1.0}, t{2, "w2", 0.8, 1.6, 1.0};
  const ModifiedContours a = ApplyCues(tc, std::vector<StressCue>{s, t});
  const ModifiedContours b = ApplyCues(tc, std::vector<StressCue>{t, s});
  CHECK(a.pitch == b.pitch);
  CHECK(a.energy == b.energy);
  CHECK(a.duration == b.duration);
}

TEST_CASE("upsampling repeats values by duration") {
  const std::vector<double> v{1.0, 2.0, 3.0};
  const std::vector<std::int64_t> d{2, 3, 1};
  CHECK(UpsampleByDuration(v, d) == std::vector<double>{1, 1, 2, 2, 2, 3});
  const std::vector<std::int64_t> zeros{0, 0, 0};
  CHECK(UpsampleByDuration(v, zeros).empty());
  const std::vector<std::int64_t> neg{1, -1, 0};
  CHECK_ERROR_CODE(UpsampleByDuration(v, neg), ErrorCode::kNegativeDuration);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> values(rng() % 30);
    std::vector<std::int64_t> durs(values.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = static_cast<double>(rng() % 1000) / 7.0;
      durs[i] = static_cast<std::int64_t>(rng() % 12);
      total += durs[i];
    }
    const auto out = UpsampleByDuration(values, durs);
    CHECK(out == oracle::NaiveUpsample(values, durs));
    CHECK(static_cast<std::int64_t>(out.size()) == total);
  }
}

TEST_CASE("clamping scales") {
  std::vector<StressCue> cues{{0, "a", 3.0, 0.1, 1.2}};
  const auto once = ClampScales(cues, {0.5, 2.0});
  CHECK(once[0].pitch_scale == 2.0);
  CHECK(once[0].energy_scale == 0.5);
  CHECK(once[0].duration_scale == 1.2);
  CHECK(ClampScales(once, {0.5, 2.0}) == once);
  CHECK_ERROR_CODE(ClampScales(cues, {2.0, 1.0}), ErrorCode::kInvalidBounds);
  CHECK_ERROR_CODE(ClampScales(cues, {0.0, 1.0}), ErrorCode::kInvalidBounds);
}

}  // namespace
}  // namespace stresskit
