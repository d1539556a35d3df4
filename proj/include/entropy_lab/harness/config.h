/*
 * Copyright 2026 The Entropy Lab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ENTROPY_LAB_HARNESS_CONFIG_H_
#define ENTROPY_LAB_HARNESS_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "entropy_lab/datagen/synth.h"
#include "entropy_lab/estimators/report.h"
#include "entropy_lab/nnet/train.h"
#include "entropy_lab/tta/config.h"

namespace entropy_lab::harness {

struct SuiteConfig {
  std::vector<datagen::CorruptionKind> kinds;
  std::vector<int> severities;
  std::size_t per_class = 0;  // 0: data.test_per_class
};

struct FitConfig {
  std::vector<datagen::CorruptionKind> kinds;  // fitting pool over holdout_fit
  std::vector<int> severities;
  int degree = 2;
  bool weighted = true;
  bool include_clean_val = true;
};

struct EstimateConfig {
  std::vector<estimators::Method> methods;
  std::size_t cot_max_rows = 1000;
  std::string logits_path;  // optional external logits dump
};

// Long Tent runs that expose both adaptation phases.
struct DynamicsConfig {
  tta::TtaConfig tta;            // method, lr, stop_iter, eval_interval, ...
  std::string dataset;           // suite dataset used by `adapt`
  bool diagnostics = true;       // Silhouette / Shift distance per record
  bool projection = false;       // 2-D PCA of holdout embeddings per record
  std::size_t diagnostics_every = 1;  // compute diagnostics every n-th record
  int topk_exclusion = 0;
  double entropy_exclusion = -1.0;
};

struct AblateConfig {
  std::vector<std::size_t> stop_iters;
  std::vector<std::size_t> track_sizes;
  std::vector<std::size_t> subset_sizes;
  std::size_t resamples = 50;
};

struct EmGmmConfig {
  std::size_t k = 6;
  std::size_t dim = 2;
  std::size_t per_cluster = 50;
  double radius = 6.0;
  double eta = 0.1;
  std::size_t iterations = 50;
  std::size_t seeds = 20;
  double offset_factor = 2.0;  // offset length in units of cluster separation
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::filesystem::path out = "out";
  datagen::SynthSpec data;
  std::size_t hidden = 64;
  nnet::PretrainConfig pretrain;
  tta::TtaConfig tta;  // flip measurement runs (RDumb by default)
  SuiteConfig suite;
  FitConfig fit;
  EstimateConfig estimate;
  DynamicsConfig dynamics;
  AblateConfig ablate;
  EmGmmConfig emgmm;
};

// Built-in defaults (the default synthetic benchmark).
RunConfig DefaultConfig();

// Parses `[section]` / `key = value` text on top of the defaults. Unknown
// sections or keys and malformed values raise ConfigError naming the key.
RunConfig ParseConfig(std::istream& in);
RunConfig LoadConfig(const std::filesystem::path& path);

// Every key with its resolved value; ParseConfig(WriteConfig(c)) == c.
void WriteConfig(const RunConfig& cfg, std::ostream& out);

// Validates cross-field constraints (ConfigError).
void ValidateConfig(const RunConfig& cfg);

}  // namespace entropy_lab::harness

#endif  // ENTROPY_LAB_HARNESS_CONFIG_H_
