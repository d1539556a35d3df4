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

#include <cmath>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "entropy_lab/datagen/labeled_set_csv.h"
#include "entropy_lab/datagen/synth.h"
#include "entropy_lab/nnet/train.h"
#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::datagen {
namespace {

using numcore::Mat;
using numcore::Seed;

SynthWorld SmallWorld(double std = 1.0) {
  SynthSpec spec;
  spec.classes = 4;
  spec.dim = 5;
  spec.within_std = std;
  spec.train_per_class = 20;
  spec.val_per_class = 5;
  spec.holdout_per_class = 10;
  spec.test_per_class = 10;
  spec.seed = 3;
  return SynthWorld::Create(spec);
}

TEST(SynthTest, SplitSizesAndDeterminism) {
  SynthWorld w = SmallWorld();
  SourceSplits a = GenSource(w), b = GenSource(w);
  EXPECT_EQ(a.train.size(), 80u);
  EXPECT_EQ(a.val.size(), 20u);
  EXPECT_EQ(a.holdout_fit.size(), 40u);
  EXPECT_EQ(a.test_clean.size(), 40u);
  EXPECT_EQ(a.train.features, b.train.features);
  EXPECT_EQ(a.test_clean.labels, b.test_clean.labels);
  EXPECT_NE(a.train.features.row(0)[0], a.val.features.row(0)[0]);
}

TEST(SynthTest, ZeroNoiseSamplesSitOnMeans) {
  SynthWorld w = SmallWorld(1e-300);
  LabeledSet s = w.Sample(3, Seed{1}, "s");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      EXPECT_NEAR(s.features(i, j), w.class_means(static_cast<std::size_t>(s.labels[i]), j), 1e-250);
}

TEST(SynthTest, InvalidSpec) {
  SynthSpec spec;
  spec.classes = 1;
  EXPECT_THROW(spec.Validate(), PreconditionError);
  spec = SynthSpec{};
  spec.within_std = 0.0;
  EXPECT_THROW(spec.Validate(), PreconditionError);
}

TEST(CorruptionTest, ZeroSigmaIsIdentity) {
  SynthWorld w = SmallWorld();
  LabeledSet s = w.Sample(5, Seed{1}, "s");
  Corruption c{CorruptionKind::kAdditiveGaussian, 1, 0.0};
  EXPECT_EQ(ApplyCorruption(w, s, c, Seed{2}).features, s.features);
}

TEST(CorruptionTest, OodInjectCounts) {
  SynthWorld w = SmallWorld();
  LabeledSet s = w.Sample(250, Seed{1}, "s");
  Corruption c{CorruptionKind::kOodInject, 3, 0.3};
  LabeledSet out = ApplyCorruption(w, s, c, Seed{2});
  EXPECT_EQ(out.size(), 1300u);
  std::size_t ood = 0;
  for (int y : out.labels) ood += y == kNoLabel;
  EXPECT_EQ(ood, 300u);
}

TEST(CorruptionTest, LaddersIncrease) {
  for (auto kind : {CorruptionKind::kAdditiveGaussian, CorruptionKind::kMeanShift,
                    CorruptionKind::kFeatureScale, CorruptionKind::kOodInject}) {
    double prev = 0.0;
    for (int s = 1; s <= 5; ++s) {
      double m = Corruption::AtSeverity(kind, s, 1.0).magnitude;
      if (kind == CorruptionKind::kFeatureScale) m = std::abs(std::log(m));
      EXPECT_GT(m, prev);
      prev = m;
    }
    EXPECT_EQ(ParseKind(KindName(kind)), kind);
  }
  EXPECT_THROW(Corruption::AtSeverity(CorruptionKind::kMeanShift, 6, 1.0), PreconditionError);
  EXPECT_EQ(Corruption::AtSeverity(CorruptionKind::kMeanShift, 3, 1.0).Name(), "mean-shift-3");
  EXPECT_THROW(ParseKind("blur"), ConfigError);
}

TEST(CorruptionTest, MeanShiftMovesEachClassRigidly) {
  SynthWorld w = SmallWorld();
  LabeledSet s = w.Sample(4, Seed{1}, "s");
  Corruption c = Corruption::AtSeverity(CorruptionKind::kMeanShift, 2, 1.0);
  LabeledSet out = ApplyCorruption(w, s, c, Seed{5});
  std::vector<std::vector<double>> delta(4);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto y = static_cast<std::size_t>(s.labels[i]);
    std::vector<double> d;
    for (std::size_t j = 0; j < s.dim(); ++j) d.push_back(out.features(i, j) - s.features(i, j));
    if (delta[y].empty()) {
      delta[y] = d;
      double n = 0.0;
      for (double v : d) n += v * v;
      EXPECT_NEAR(std::sqrt(n), c.magnitude, 1e-9);
    } else {
      for (std::size_t j = 0; j < d.size(); ++j) EXPECT_NEAR(d[j], delta[y][j], 1e-12);
    }
  }
}

TEST(CorruptionTest, SharedStructureSeed) {
  SynthWorld w = SmallWorld();
  Corruption c = Corruption::AtSeverity(CorruptionKind::kMeanShift, 1, 1.0);
  LabeledSet a = w.Sample(2, Seed{1}, "a");
  LabeledSet b = w.Sample(2, Seed{2}, "b");
  LabeledSet ca = ApplyCorruption(w, a, c, Seed{9}, Seed{1});
  LabeledSet cb = ApplyCorruption(w, b, c, Seed{9}, Seed{2});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a.labels[i] == b.labels[k]) {
        EXPECT_NEAR(ca.features(i, 0) - a.features(i, 0), cb.features(k, 0) - b.features(k, 0), 1e-12);
      }
}

TEST(CorruptionTest, NovelMeansAreFarFromSources) {
  SynthWorld w = SmallWorld();
  Mat novel = NovelMeans(w, Seed{4});
  EXPECT_EQ(novel.rows(), static_cast<std::size_t>(kNovelClusters));
  for (std::size_t i = 0; i < novel.rows(); ++i)
    for (std::size_t c = 0; c < w.class_means.rows(); ++c)
      EXPECT_GT(numcore::Distance(novel.row(i), w.class_means.row(c)), 3.0);
}

TEST(SuiteTest, NamesAndCount) {
  SynthWorld w = SmallWorld();
  auto suite = MakeShiftSuite(w, {CorruptionKind::kAdditiveGaussian, CorruptionKind::kFeatureScale},
                              {1, 2, 3, 4, 5}, Seed{1});
  EXPECT_EQ(suite.size(), 10u);
  std::set<std::string> names;
  for (const auto& [n, s] : suite) names.insert(n);
  EXPECT_EQ(names.size(), 10u);
  EXPECT_TRUE(names.count("feature-scale-4"));
}

TEST(LabeledSetTest, CsvRoundTrip) {
  SynthWorld w = SmallWorld();
  LabeledSet s = ApplyCorruption(w, w.Sample(3, Seed{1}, "s"),
                                 Corruption::AtSeverity(CorruptionKind::kOodInject, 5, 1.0), Seed{2});
  std::stringstream ss;
  WriteLabeledSetCsv(s, ss);
  LabeledSet back = ReadLabeledSetCsv(ss, "csv");
  EXPECT_EQ(back.features, s.features);
  EXPECT_EQ(back.labels, s.labels);
}

TEST(LabeledSetTest, MalformedCsv) {
  std::stringstream ragged("id,label,f0,f1\n0,1,0.5\n");
  EXPECT_THROW(ReadLabeledSetCsv(ragged, "x"), ParseError);
  std::stringstream text("id,label,f0\n0,1,abc\n");
  EXPECT_THROW(ReadLabeledSetCsv(text, "x"), ParseError);
}

TEST(LabeledSetTest, AccuracyCountsNoLabelAsWrong) {
  std::vector<int> pred = {0, 1, 2, 0};
  std::vector<int> label = {0, 1, kNoLabel, 1};
  EXPECT_DOUBLE_EQ(Accuracy(pred, label), 0.5);
}

TEST(LabeledSetTest, Validate) {
  LabeledSet s;
  s.features = Mat(2, 2);
  s.labels = {0, 5};
  EXPECT_THROW(s.Validate(3), PreconditionError);
  s.labels = {0};
  EXPECT_THROW(s.Validate(3), DimensionError);
}

}  // namespace
}  // namespace entropy_lab::datagen
