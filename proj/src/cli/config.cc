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

#include "stresskit/cli/config.h"

#include <charconv>
#include <set>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "stresskit/error.h"
#include "stresskit/io/file_util.h"

namespace stresskit::cli {

using nlohmann::json;

namespace {

void RejectUnknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidConfig, where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw Error(ErrorCode::kInvalidConfig, "unknown config key " + where + "." + key);
    }
  }
}

template <typename T>
void Read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kInvalidConfig, std::string("bad value for config key ") + key);
  }
}

const char* LpaKernelName(classifier::LpaKernel k) {
  return k == classifier::LpaKernel::kKnnRbf ? "knn_rbf" : "rbf";
}

}  // namespace

void PipelineConfig::PropagateSeed() {
  model.rfc.rng_seed = seed;
  if (smote) smote->rng_seed = seed;
}

void PipelineConfig::Validate() const {
  feature.Validate();
  scaling.Validate();
  if (smote) smote->Validate();
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "train_fraction must lie in (0, 1)");
  }
  if (jobs < 0) throw Error(ErrorCode::kInvalidConfig, "jobs must be >= 0");
  if (aggregate.min_annotators < 1) {
    throw Error(ErrorCode::kInvalidConfig, "min_annotators must be >= 1");
  }
  const auto& m = model;
  if (!(m.svc.penalty_c > 0.0) || !(m.svc.tol > 0.0) || m.rfc.n_trees < 1 ||
      m.rfc.max_depth < 0 || m.rfc.min_samples_split < 2 || m.rfc.max_features < 0 ||
      m.lpa.n_neighbors < 1 || m.lpa.max_iter < 1 || !(m.lpa.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "model parameters must be positive");
  }
}

int PipelineConfig::EffectiveJobs() const {
  if (jobs > 0) return jobs;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

json PipelineConfigToJson(const PipelineConfig& cfg) {
  json smote = nullptr;
  if (cfg.smote) {
    smote = {{"k_neighbors", cfg.smote->k_neighbors}, {"target_ratio", cfg.smote->target_ratio}};
  }
  json min_kappa = nullptr;
  if (cfg.aggregate.min_kappa) min_kappa = *cfg.aggregate.min_kappa;
  return json{
      {"feature", dsp::FeatureConfigToJson(cfg.feature)},
      {"model",
       {{"family", classifier::ModelFamilyName(cfg.model.family)},
        {"svc",
         {{"penalty_c", cfg.model.svc.penalty_c},
          {"gamma", cfg.model.svc.gamma},
          {"tol", cfg.model.svc.tol},
          {"cache_mb", cfg.model.svc.cache_mb}}},
        {"rfc",
         {{"n_trees", cfg.model.rfc.n_trees},
          {"max_depth", cfg.model.rfc.max_depth},
          {"min_samples_split", cfg.model.rfc.min_samples_split},
          {"max_features", cfg.model.rfc.max_features}}},
        {"lpa",
         {{"kernel", LpaKernelName(cfg.model.lpa.kernel)},
          {"n_neighbors", cfg.model.lpa.n_neighbors},
          {"gamma", cfg.model.lpa.gamma},
          {"max_iter", cfg.model.lpa.max_iter},
          {"tol", cfg.model.lpa.tol}}}}},
      {"smote", smote},
      {"aggregate", {{"min_annotators", cfg.aggregate.min_annotators}, {"min_kappa", min_kappa}}},
      {"clamp", {cfg.scaling.bounds.lo, cfg.scaling.bounds.hi}},
      {"duration_scale", cfg.scaling.duration_scale},
      {"train_fraction", cfg.train_fraction},
      {"seed", cfg.seed},
      {"jobs", cfg.jobs}};
}

PipelineConfig ApplyConfigJson(PipelineConfig cfg, const json& j) {
  RejectUnknown(j,
                {"feature", "model", "smote", "aggregate", "clamp", "duration_scale",
                 "train_fraction", "seed", "jobs"},
                "config");
  try {
    if (j.contains("feature")) {
      // Start from the current values so a partial block only overrides
      // what it names.
      json merged = dsp::FeatureConfigToJson(cfg.feature);
      merged.merge_patch(j["feature"]);
      cfg.feature = dsp::FeatureConfigFromJson(merged);
    }
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("feature block: ") + e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("feature block: ") + e.what());
  }
  if (j.contains("model")) {
    const json& m = j["model"];
    RejectUnknown(m, {"family", "svc", "rfc", "lpa"}, "model");
    if (m.contains("family")) {
      std::string family;
      Read(m, "family", family);
      cfg.model.family = classifier::ParseModelFamily(family);
    }
    if (m.contains("svc")) {
      const json& s = m["svc"];
      RejectUnknown(s, {"penalty_c", "gamma", "tol", "cache_mb", "max_iter"}, "model.svc");
      Read(s, "penalty_c", cfg.model.svc.penalty_c);
      Read(s, "gamma", cfg.model.svc.gamma);
      Read(s, "tol", cfg.model.svc.tol);
      Read(s, "cache_mb", cfg.model.svc.cache_mb);
      Read(s, "max_iter", cfg.model.svc.max_iter);
    }
    if (m.contains("rfc")) {
      const json& r = m["rfc"];
      RejectUnknown(r, {"n_trees", "max_depth", "min_samples_split", "max_features"}, "model.rfc");
      Read(r, "n_trees", cfg.model.rfc.n_trees);
      Read(r, "max_depth", cfg.model.rfc.max_depth);
      Read(r, "min_samples_split", cfg.model.rfc.min_samples_split);
      Read(r, "max_features", cfg.model.rfc.max_features);
    }
    if (m.contains("lpa")) {
      const json& l = m["lpa"];
      RejectUnknown(l, {"kernel", "n_neighbors", "gamma", "max_iter", "tol"}, "model.lpa");
      if (l.contains("kernel")) {
        std::string kernel;
        Read(l, "kernel", kernel);
        if (kernel == "knn_rbf") {
          cfg.model.lpa.kernel = classifier::LpaKernel::kKnnRbf;
        } else if (kernel == "rbf") {
          cfg.model.lpa.kernel = classifier::LpaKernel::kRbf;
        } else {
          throw Error(ErrorCode::kInvalidConfig, "model.lpa.kernel must be knn_rbf or rbf");
        }
      }
      Read(l, "n_neighbors", cfg.model.lpa.n_neighbors);
      Read(l, "gamma", cfg.model.lpa.gamma);
      Read(l, "max_iter", cfg.model.lpa.max_iter);
      Read(l, "tol", cfg.model.lpa.tol);
    }
  }
  if (j.contains("smote")) {
    const json& s = j["smote"];
    if (s.is_null() || (s.is_boolean() && !s.get<bool>())) {
      cfg.smote.reset();
    } else if (s.is_boolean()) {
      if (!cfg.smote) cfg.smote = classifier::SmoteConfig{};
    } else {
      RejectUnknown(s, {"k_neighbors", "target_ratio"}, "smote");
      if (!cfg.smote) cfg.smote = classifier::SmoteConfig{};
      Read(s, "k_neighbors", cfg.smote->k_neighbors);
      Read(s, "target_ratio", cfg.smote->target_ratio);
    }
  }
  if (j.contains("aggregate")) {
    const json& a = j["aggregate"];
    RejectUnknown(a, {"min_annotators", "min_kappa"}, "aggregate");
    Read(a, "min_annotators", cfg.aggregate.min_annotators);
    if (a.contains("min_kappa")) {
      if (a["min_kappa"].is_null()) {
        cfg.aggregate.min_kappa.reset();
      } else {
        double k = 0.0;
        Read(a, "min_kappa", k);
        cfg.aggregate.min_kappa = k;
      }
    }
  }
  if (j.contains("clamp")) {
    std::vector<double> c;
    Read(j, "clamp", c);
    if (c.size() != 2) throw Error(ErrorCode::kInvalidConfig, "clamp must be [lo, hi]");
    cfg.scaling.bounds = {c[0], c[1]};
  }
  Read(j, "duration_scale", cfg.scaling.duration_scale);
  Read(j, "train_fraction", cfg.train_fraction);
  Read(j, "seed", cfg.seed);
  Read(j, "jobs", cfg.jobs);
  return cfg;
}

PipelineConfig LoadConfigFile(PipelineConfig base, const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(io::ReadTextFile(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidConfig, path.string() + ": " + e.what());
  }
  return ApplyConfigJson(std::move(base), j);
}

ScaleBounds ParseClamp(std::string_view text) {
  const auto colon = text.find(':');
  ScaleBounds b;
  const auto parse = [&](std::string_view s, double& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  if (colon == std::string_view::npos || !parse(text.substr(0, colon), b.lo) ||
      !parse(text.substr(colon + 1), b.hi)) {
    throw Error(ErrorCode::kInvalidBounds, "--clamp expects LO:HI, got \"" + std::string(text) + "\"");
  }
  b.Validate();
  return b;
}

}  // namespace stresskit::cli
