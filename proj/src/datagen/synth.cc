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

#include "entropy_lab/datagen/synth.h"

#include <array>
#include <cmath>
#include <limits>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::datagen {

using numcore::Mat;
using numcore::Rng;
using numcore::Seed;

void SynthSpec::Validate() const {
  if (classes < 2) throw PreconditionError("synth spec: classes must be >= 2");
  if (dim < 2) throw PreconditionError("synth spec: dim must be >= 2");
  if (!(within_std > 0.0)) throw PreconditionError("synth spec: std must be > 0");
  if (!(mean_scale > 0.0)) throw PreconditionError("synth spec: mean_scale must be > 0");
}

namespace {

std::vector<double> RandomUnit(Rng& rng, std::size_t d) {
  std::vector<double> v(d);
  double norm = 0.0;
  while (norm < 1e-12) {
    for (double& x : v) x = rng.Normal();
    norm = numcore::Norm(v);
  }
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace

SynthWorld SynthWorld::Create(const SynthSpec& spec) {
  spec.Validate();
  SynthWorld w{spec, Mat(static_cast<std::size_t>(spec.classes), spec.dim)};
  Rng rng(Seed{spec.seed}.Derive("datagen.means"));
  const double radius = spec.mean_scale * spec.within_std;
  for (int c = 0; c < spec.classes; ++c) {
    const auto u = RandomUnit(rng, spec.dim);
    auto row = w.class_means.row(static_cast<std::size_t>(c));
    for (std::size_t j = 0; j < spec.dim; ++j) row[j] = radius * u[j];
  }
  return w;
}

LabeledSet SynthWorld::Sample(std::size_t per_class, Seed seed, std::string tag) const {
  Rng rng(seed);
  const std::size_t c_count = static_cast<std::size_t>(spec.classes);
  const std::size_t n = per_class * c_count;
  std::vector<std::size_t> order = rng.Permutation(n);
  LabeledSet out{Mat(n, spec.dim), std::vector<int>(n), std::move(tag)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t cls = k / per_class;
    auto row = out.features.row(order[k]);
    const auto mean = class_means.row(cls);
    for (std::size_t j = 0; j < spec.dim; ++j)
      row[j] = mean[j] + rng.Normal(0.0, spec.within_std);
    out.labels[order[k]] = static_cast<int>(cls);
  }
  return out;
}

SourceSplits GenSource(const SynthWorld& world) {
  const Seed root{world.spec.seed};
  return {world.Sample(world.spec.train_per_class, root.Derive("datagen.train"), "train"),
          world.Sample(world.spec.val_per_class, root.Derive("datagen.val"), "val"),
          world.Sample(world.spec.holdout_per_class, root.Derive("datagen.holdout_fit"),
                       "holdout-fit"),
          world.Sample(world.spec.test_per_class, root.Derive("datagen.test_clean"),
                       "test-clean")};
}

std::string KindName(CorruptionKind kind) {
  switch (kind) {
    case CorruptionKind::kAdditiveGaussian: return "additive-gaussian";
    case CorruptionKind::kMeanShift: return "mean-shift";
    case CorruptionKind::kFeatureScale: return "feature-scale";
    case CorruptionKind::kOodInject: return "ood-inject";
  }
  return "unknown";
}

CorruptionKind ParseKind(const std::string& name) {
  for (auto k : {CorruptionKind::kAdditiveGaussian, CorruptionKind::kMeanShift,
                 CorruptionKind::kFeatureScale, CorruptionKind::kOodInject}) {
    if (KindName(k) == name) return k;
  }
  throw ConfigError("unknown corruption kind '" + name + "'");
}

Corruption Corruption::AtSeverity(CorruptionKind kind, int severity, double within_std) {
  if (severity < 1 || severity > 5)
    throw PreconditionError("corruption severity must be in 1..5");
  static constexpr std::array<double, 5> kSigma = {0.5, 1.0, 1.5, 2.0, 3.0};
  static constexpr std::array<double, 5> kShift = {4.0, 6.0, 8.0, 12.0, 16.0};
  static constexpr std::array<double, 5> kScale = {2.0, 3.0, 5.0, 7.0, 9.0};
  static constexpr std::array<double, 5> kFraction = {0.1, 0.2, 0.3, 0.5, 0.8};
  const auto s = static_cast<std::size_t>(severity - 1);
  Corruption c{kind, severity, 0.0};
  switch (kind) {
    case CorruptionKind::kAdditiveGaussian: c.magnitude = kSigma[s] * within_std; break;
    case CorruptionKind::kMeanShift: c.magnitude = kShift[s] * within_std; break;
    case CorruptionKind::kFeatureScale: c.magnitude = kScale[s]; break;
    case CorruptionKind::kOodInject: c.magnitude = kFraction[s]; break;
  }
  return c;
}

std::string Corruption::Name() const {
  return KindName(kind) + "-" + std::to_string(severity);
}

Mat NovelMeans(const SynthWorld& world, Seed seed) {
  Rng rng(seed);
  const std::size_t d = world.spec.dim;
  const double radius = world.spec.mean_scale * world.spec.within_std;
  const double min_dist = 3.0 * world.spec.within_std;
  Mat out(kNovelClusters, d);
  for (int k = 0; k < kNovelClusters; ++k) {
    std::vector<double> m(d);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000)
        throw PreconditionError("ood-inject: no novel mean far enough from sources");
      const auto u = RandomUnit(rng, d);
      for (std::size_t j = 0; j < d; ++j) m[j] = radius * u[j];
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < world.class_means.rows(); ++c)
        nearest = std::min(nearest, numcore::Distance(m, world.class_means.row(c)));
      if (nearest > min_dist) break;
    }
    std::copy(m.begin(), m.end(), out.row(static_cast<std::size_t>(k)).begin());
  }
  return out;
}

LabeledSet ApplyCorruption(const SynthWorld& world, const LabeledSet& set,
                           const Corruption& c, Seed seed) {
  return ApplyCorruption(world, set, c, seed, seed.Derive("datagen.noise"));
}

LabeledSet ApplyCorruption(const SynthWorld& world, const LabeledSet& set,
                           const Corruption& c, Seed structure_seed, Seed noise_seed) {
  if (c.severity < 1 || c.severity > 5)
    throw PreconditionError("corruption severity must be in 1..5");
  LabeledSet out = set;
  out.provenance = set.provenance + "+" + c.Name();
  Rng structure(structure_seed.Derive("datagen.structure"));
  Rng noise(noise_seed);
  const std::size_t d = set.dim();
  switch (c.kind) {
    case CorruptionKind::kAdditiveGaussian:
      if (c.magnitude > 0.0)
        for (double& v : out.features.data()) v += noise.Normal(0.0, c.magnitude);
      break;
    case CorruptionKind::kMeanShift: {
      const std::size_t classes = world.class_means.rows();
      Mat offsets(classes, d);
      for (std::size_t k = 0; k < classes; ++k) {
        const auto u = RandomUnit(structure, d);
        for (std::size_t j = 0; j < d; ++j) offsets(k, j) = c.magnitude * u[j];
      }
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out.labels[i] == kNoLabel) continue;
        auto row = out.features.row(i);
        const auto off = offsets.row(static_cast<std::size_t>(out.labels[i]));
        for (std::size_t j = 0; j < d; ++j) row[j] += off[j];
      }
      break;
    }
    case CorruptionKind::kFeatureScale: {
      // Feature j is scaled by s^u_j, u_j ~ U[-1, 1].
      const double log_s = std::log(c.magnitude);
      std::vector<double> factor(d);
      for (double& f : factor) f = std::exp(log_s * structure.Uniform(-1.0, 1.0));
      for (std::size_t i = 0; i < out.size(); ++i) {
        auto row = out.features.row(i);
        for (std::size_t j = 0; j < d; ++j) row[j] *= factor[j];
      }
      break;
    }
    case CorruptionKind::kOodInject: {
      const Mat novel = NovelMeans(world, structure_seed.Derive("datagen.novel"));
      const auto extra = static_cast<std::size_t>(
          std::llround(c.magnitude * static_cast<double>(set.size())));
      std::vector<double> data(set.features.data().begin(), set.features.data().end());
      data.reserve(data.size() + extra * d);
      for (std::size_t k = 0; k < extra; ++k) {
        const auto mean = novel.row(k % kNovelClusters);
        for (std::size_t j = 0; j < d; ++j)
          data.push_back(mean[j] + noise.Normal(0.0, world.spec.within_std));
        out.labels.push_back(kNoLabel);
      }
      // Novel rows land at random positions; source rows keep their relative
      // order, so any prefix of the stream mixes both populations.
      const std::size_t total = set.size() + extra;
      auto slots = noise.Permutation(total);
      std::vector<char> is_novel(total, 0);
      for (std::size_t k = 0; k < extra; ++k) is_novel[slots[k]] = 1;
      std::vector<std::size_t> order(total);
      std::size_t next_src = 0, next_new = set.size();
      for (std::size_t p = 0; p < total; ++p)
        order[p] = is_novel[p] ? next_new++ : next_src++;
      LabeledSet merged{Mat(set.size() + extra, d, std::move(data)), out.labels, ""};
      out = merged.Subset(order, out.provenance);
      break;
    }
  }
  return out;
}

LabeledSet SuitePool(const SynthWorld& world, Seed seed, std::size_t per_class) {
  if (per_class == 0) per_class = world.spec.test_per_class;
  return world.Sample(per_class, seed.Derive("datagen.suite_pool"), "suite-pool");
}

Seed SuiteDatasetSeed(Seed seed, const std::string& name) {
  return seed.Derive("datagen.suite." + name);
}

std::vector<std::pair<std::string, LabeledSet>> MakeShiftSuite(
    const SynthWorld& world, const std::vector<CorruptionKind>& kinds,
    const std::vector<int>& severities, Seed seed, std::size_t per_class) {
  if (kinds.empty() || severities.empty())
    throw PreconditionError("shift suite: kinds and severities must be non-empty");
  const LabeledSet pool = SuitePool(world, seed, per_class);
  std::vector<std::pair<std::string, LabeledSet>> suite;
  for (auto kind : kinds) {
    for (int sev : severities) {
      const auto c = Corruption::AtSeverity(kind, sev, world.spec.within_std);
      const std::string name = c.Name();
      suite.emplace_back(name, ApplyCorruption(world, pool, c, SuiteDatasetSeed(seed, name)));
      suite.back().second.provenance = name;
    }
  }
  return suite;
}

}  // namespace entropy_lab::datagen
