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

#ifndef ENTROPY_LAB_DATAGEN_SYNTH_H_
#define ENTROPY_LAB_DATAGEN_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entropy_lab/datagen/labeled_set.h"
#include "entropy_lab/numcore/mat.h"
#include "entropy_lab/numcore/random.h"

namespace entropy_lab::datagen {

// Isotropic Gaussian classes whose means lie on a sphere of radius
// mean_scale * within_std.
struct SynthSpec {
  int classes = 16;
  std::size_t dim = 32;
  double mean_scale = 6.0;
  double within_std = 1.0;
  std::size_t train_per_class = 200;
  std::size_t val_per_class = 60;
  std::size_t holdout_per_class = 125;
  std::size_t test_per_class = 125;
  std::uint64_t seed = 0;

  // Throws PreconditionError unless C >= 2, d >= 2, std > 0.
  void Validate() const;
};

// The fixed generative model behind a spec: class means plus the spec.
struct SynthWorld {
  SynthSpec spec;
  numcore::Mat class_means;  // C x d

  static SynthWorld Create(const SynthSpec& spec);

  // `per_class` fresh samples of every class, shuffled, from `seed`.
  LabeledSet Sample(std::size_t per_class, numcore::Seed seed, std::string tag) const;
};

struct SourceSplits {
  LabeledSet train;
  LabeledSet val;
  LabeledSet holdout_fit;  // clean pool that fitting-set corruptions are drawn from
  LabeledSet test_clean;
};

// Four independent draws (disjoint by construction), deterministic per seed.
SourceSplits GenSource(const SynthWorld& world);

enum class CorruptionKind {
  kAdditiveGaussian,  // x + N(0, sigma^2 I)
  kMeanShift,         // x + delta * u_y, one random unit direction per class y
  kFeatureScale,      // x_j * s^(u_j), u_j ~ U[-1, 1] per feature
  kOodInject,         // append fraction * n samples from novel clusters, label -1
};

std::string KindName(CorruptionKind kind);
// Throws ConfigError on an unknown name.
CorruptionKind ParseKind(const std::string& name);

struct Corruption {
  CorruptionKind kind = CorruptionKind::kAdditiveGaussian;
  int severity = 1;  // 1..5
  // sigma, delta, s or fraction depending on kind.
  double magnitude = 0.0;

  // Magnitude from the built-in severity ladder; sigma and delta are in units
  // of the within-class std. Ladders strictly increase in severity (|ln s| for
  // feature-scale).
  static Corruption AtSeverity(CorruptionKind kind, int severity, double within_std);

  std::string Name() const;  // e.g. "additive-gaussian-3"
};

// Number of novel clusters ood-inject draws from.
inline constexpr int kNovelClusters = 4;

// Labels are preserved except for ood-inject, which appends novel-cluster
// samples labelled kNoLabel. Throws PreconditionError for severity outside
// 1..5.
LabeledSet ApplyCorruption(const SynthWorld& world, const LabeledSet& set,
                           const Corruption& c, numcore::Seed seed);

// Directions, per-feature factors and novel means are drawn from
// `structure_seed`, per-row noise and placement from `noise_seed`; applying
// one corruption to two pools with the same structure seed shifts both the
// same way.
LabeledSet ApplyCorruption(const SynthWorld& world, const LabeledSet& set,
                           const Corruption& c, numcore::Seed structure_seed,
                           numcore::Seed noise_seed);

// Novel cluster means for ood-inject: on the class-mean sphere, each farther
// than 3 * within_std from every source mean.
numcore::Mat NovelMeans(const SynthWorld& world, numcore::Seed seed);

// The clean pool MakeShiftSuite corrupts (per_class 0: spec.test_per_class).
LabeledSet SuitePool(const SynthWorld& world, numcore::Seed seed, std::size_t per_class = 0);

// Seed MakeShiftSuite passes to ApplyCorruption for the dataset `name`.
numcore::Seed SuiteDatasetSeed(numcore::Seed seed, const std::string& name);

// Cartesian product kinds x severities applied to one fresh test pool.
std::vector<std::pair<std::string, LabeledSet>> MakeShiftSuite(
    const SynthWorld& world, const std::vector<CorruptionKind>& kinds,
    const std::vector<int>& severities, numcore::Seed seed,
    std::size_t per_class = 0);

}  // namespace entropy_lab::datagen

#endif  // ENTROPY_LAB_DATAGEN_SYNTH_H_
