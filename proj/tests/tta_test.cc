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
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "entropy_lab/datagen/synth.h"
#include "entropy_lab/nnet/train.h"
#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/tta/adapt.h"
#include "entropy_lab/tta/filters.h"
#include "entropy_lab/tta/flip_tracker.h"
#include "entropy_lab/tta/trace_csv.h"
#include "oracles.h"

namespace entropy_lab::tta {
namespace {

using numcore::Mat;
using numcore::Rng;
using numcore::Seed;

struct Fixture {
  datagen::SynthWorld world;
  nnet::Classifier net;
  datagen::LabeledSet stream;
  datagen::LabeledSet holdout;
};

Fixture MakeFixture() {
  datagen::SynthSpec spec;
  spec.classes = 4;
  spec.dim = 6;
  spec.train_per_class = 50;
  spec.seed = 5;
  auto world = datagen::SynthWorld::Create(spec);
  auto net = nnet::Classifier::Create(nnet::DefaultArchitecture(6, 4, 16), Seed{1});
  nnet::PretrainConfig pc;
  pc.epochs = 3;
  pc.accuracy_floor = 0.0;
  nnet::Pretrain(net, world.Sample(50, Seed{1}, "train"), world.Sample(10, Seed{2}, "val"), pc,
                 Seed{3});
  auto shift = datagen::Corruption::AtSeverity(datagen::CorruptionKind::kAdditiveGaussian, 3, 1.0);
  auto stream = datagen::ApplyCorruption(world, world.Sample(40, Seed{4}, "s"), shift, Seed{6});
  auto holdout = datagen::ApplyCorruption(world, world.Sample(10, Seed{5}, "h"), shift, Seed{7});
  return {world, net, stream, holdout};
}

TEST(FiltersTest, EntropyWeights) {
  const double e0 = 0.4 * std::log(1000.0);
  std::vector<double> e = {e0, e0 + 1, e0 - 1};
  auto w = EntropyWeights(e, e0);
  EXPECT_EQ(w[0], 0.0);
  EXPECT_EQ(w[1], 0.0);
  EXPECT_NEAR(w[2], 2.718282, 1e-6);
}

TEST(FiltersTest, DiversityMask) {
  Mat logits = Mat::FromRows({{2, 0}, {0, 3}, {1, 1}});
  auto none = DiversityMask(logits, std::nullopt, 0.05);
  EXPECT_EQ(none, (std::vector<double>{1, 1, 1}));
  auto m = DiversityMask(logits, std::vector<double>{1, 0}, 0.05);
  EXPECT_EQ(m[0], 0.0);
  EXPECT_EQ(m[1], 1.0);
  EXPECT_EQ(m[2], 0.0);
  auto zero = DiversityMask(Mat::FromRows({{0, 0}}), std::vector<double>{1, 0}, 0.05);
  EXPECT_EQ(zero[0], 0.0);
}

TEST(FiltersTest, EmaUpdate) {
  std::vector<double> y = {1.0, -2.0};
  EXPECT_EQ(EmaUpdate(std::nullopt, y, 0.9), y);
  EXPECT_EQ(EmaUpdate(y, y, 0.9), y);
  auto m = EmaUpdate(std::vector<double>{0.0}, std::vector<double>{1.0}, 0.9);
  EXPECT_DOUBLE_EQ(m[0], 0.9);
}

TEST(StepTest, AllFilteredLeavesParametersButCounts) {
  Fixture f = MakeFixture();
  TtaConfig cfg;
  cfg.e0 = 0.0;  // no entropy is below zero, so every sample is filtered
  AdaptState st = AdaptState::Begin(f.net);
  StepInfo info = TtaStep(st, f.stream.features.SelectRows(std::vector<std::size_t>{0, 1, 2, 3}), cfg);
  EXPECT_EQ(info.kept, 0u);
  EXPECT_EQ(st.iteration, 1u);
  EXPECT_TRUE(std::equal(f.net.params().begin(), f.net.params().end(), st.net.params().begin()));
}

TEST(StepTest, UnitWeightRdumbEqualsTent) {
  Fixture f = MakeFixture();
  TtaConfig tent;
  tent.method = Method::kTent;
  tent.lr = 0.05;
  TtaConfig rdumb = tent;
  rdumb.method = Method::kRdumb;
  rdumb.force_unit_weights = true;
  AdaptState a = AdaptState::Begin(f.net), b = AdaptState::Begin(f.net);
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 16; ++i) idx.push_back(k * 16 + i);
    Mat batch = f.stream.features.SelectRows(idx);
    TtaStep(a, batch, tent);
    TtaStep(b, batch, rdumb);
    ASSERT_TRUE(std::equal(a.net.params().begin(), a.net.params().end(), b.net.params().begin()));
  }
}

TEST(StepTest, Deterministic) {
  Fixture f = MakeFixture();
  TtaConfig cfg;
  cfg.stop_iter = 30;
  AdaptResult a = Adapt(f.net, f.stream, f.holdout, cfg, Seed{8});
  AdaptResult b = Adapt(f.net, f.stream, f.holdout, cfg, Seed{8});
  ASSERT_EQ(a.trace.records.size(), b.trace.records.size());
  for (std::size_t i = 0; i < a.trace.records.size(); ++i)
    EXPECT_EQ(a.trace.records[i].holdout_acc, b.trace.records[i].holdout_acc);
  EXPECT_EQ(a.tracker.final_predictions(), b.tracker.final_predictions());
}

TEST(ResetTest, RestoresSnapshotAtPeriod) {
  Fixture f = MakeFixture();
  TtaConfig cfg;
  cfg.lr = 0.01;
  cfg.reset_period = 4;
  AdaptState st = AdaptState::Begin(f.net);
  Mat batch = f.stream.features.SelectRows(std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
  for (int i = 0; i < 3; ++i) {
    TtaStep(st, batch, cfg);
    EXPECT_FALSE(MaybeReset(st, cfg));
  }
  EXPECT_FALSE(std::equal(f.net.params().begin(), f.net.params().end(), st.net.params().begin()));
  TtaStep(st, batch, cfg);
  EXPECT_TRUE(MaybeReset(st, cfg));
  EXPECT_TRUE(std::equal(f.net.params().begin(), f.net.params().end(), st.net.params().begin()));
  EXPECT_FALSE(st.ema.has_value());
}

TEST(ResetTest, CountInTrace) {
  Fixture f = MakeFixture();
  TtaConfig cfg;
  cfg.stop_iter = 250;
  cfg.reset_period = 100;
  cfg.eval_interval = 50;
  AdaptResult r = Adapt(f.net, f.stream, f.holdout, cfg, Seed{8});
  EXPECT_EQ(r.trace.reset_iterations, (std::vector<std::size_t>{100, 200}));
}

TEST(AdaptTest, StopZero) {
  Fixture f = MakeFixture();
  TtaConfig cfg;
  cfg.stop_iter = 0;
  AdaptResult r = Adapt(f.net, f.stream, f.holdout, cfg, Seed{8});
  EXPECT_EQ(r.trace.records.size(), 1u);
  EXPECT_EQ(r.trace.records[0].iter, 0u);
  EXPECT_EQ(r.tracker.FlipCount(), 0u);
}

TEST(AdaptTest, EvaluationGrid) {
  Fixture f = MakeFixture();
  TtaConfig cfg;
  cfg.stop_iter = 35;
  cfg.eval_interval = 10;
  AdaptResult r = Adapt(f.net, f.stream, f.holdout, cfg, Seed{8});
  std::vector<std::size_t> iters;
  for (const auto& rec : r.trace.records) iters.push_back(rec.iter);
  EXPECT_EQ(iters, (std::vector<std::size_t>{0, 10, 20, 30}));
}

TEST(AdaptTest, ShortStreamTracksEverything) {
  Fixture f = MakeFixture();
  TtaConfig cfg;
  cfg.stop_iter = 5;
  AdaptResult r = Adapt(f.net, f.stream, f.holdout, cfg, Seed{8});
  EXPECT_EQ(r.tracker.size(), f.stream.size());
  EXPECT_TRUE(r.tracker.finalized());
}

TEST(AdaptTest, EmptyStreamRejected) {
  Fixture f = MakeFixture();
  datagen::LabeledSet empty;
  empty.features = Mat(0, 6);
  EXPECT_THROW(Adapt(f.net, empty, f.holdout, TtaConfig{}, Seed{1}), PreconditionError);
}

TEST(AdaptTest, HookSeesEveryRecord) {
  Fixture f = MakeFixture();
  TtaConfig cfg;
  cfg.stop_iter = 20;
  cfg.eval_interval = 5;
  std::vector<std::size_t> seen;
  Adapt(f.net, f.stream, f.holdout, cfg, Seed{8},
        [&](const Mat& emb, const std::vector<int>& labels, std::size_t iter, double) {
          EXPECT_EQ(emb.rows(), labels.size());
          seen.push_back(iter);
          return EvalDiagnostics{0.5, 1.0, std::nullopt};
        });
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 5, 10, 15, 20}));
}

TEST(ConfigTest, Validation) {
  TtaConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.lr = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = TtaConfig{};
  cfg.batch_size = 1;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = TtaConfig{};
  cfg.alpha = 1.5;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  EXPECT_EQ(ParseMethod(MethodName(Method::kTent)), Method::kTent);
  EXPECT_THROW(ParseMethod("sgd"), ConfigError);
}

TEST(FlipTrackerTest, PercentilesAreAverageRanks) {
  auto t = FlipTracker::FromInitial(Mat(4, 1), {0, 0, 1, 1}, {0.9, 0.5, 0.5, 0.7});
  EXPECT_EQ(t.percentiles(), (std::vector<double>{1.0, 0.375, 0.375, 0.75}));
  EXPECT_THROW(t.Flipped(), PreconditionError);
  t.SetFinalPredictions({1, 0, 0, 1});
  EXPECT_EQ(t.Flipped(), (std::vector<bool>{true, false, true, false}));
  EXPECT_EQ(t.FlipCount(), 2u);
}

TEST(FlipTrackerTest, PrefixReranks) {
  auto t = FlipTracker::FromInitial(Mat(3, 1), {0, 1, 2}, {0.2, 0.9, 0.5});
  t.SetFinalPredictions({1, 1, 2});
  FlipTracker p = t.Prefix(2);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.percentiles(), (std::vector<double>{0.5, 1.0}));
  EXPECT_EQ(p.FlipCount(), 1u);
}

TEST(TraceCsvTest, RoundTrip) {
  Trace t;
  TraceRecord a;
  a.iter = 0;
  a.holdout_acc = 0.5;
  a.mean_entropy = 1.25;
  TraceRecord b;
  b.iter = 10;
  b.holdout_acc = 0.625;
  b.silhouette = -0.1;
  b.shift_distance = 3.0;
  t.records = {a, b};
  std::stringstream ss;
  WriteTraceCsv(t, ss);
  Trace back = ReadTraceCsv(ss);
  ASSERT_EQ(back.records.size(), 2u);
  EXPECT_EQ(back.records[1].silhouette, -0.1);
  EXPECT_FALSE(back.records[0].silhouette.has_value());
  EXPECT_EQ(back.records[1].holdout_acc, 0.625);
}

TEST(TraceCsvTest, FlipsRoundTrip) {
  auto t = FlipTracker::FromInitial(Mat(2, 1), {0, 1}, {0.5, 0.75});
  std::stringstream before;
  WriteFlipsCsv(t, before);
  auto rows = ReadFlipsCsv(before);
  EXPECT_FALSE(rows[0].flipped.has_value());
  t.SetFinalPredictions({1, 1});
  std::stringstream after;
  WriteFlipsCsv(t, after);
  rows = ReadFlipsCsv(after);
  EXPECT_EQ(rows[0].flipped, true);
  EXPECT_EQ(rows[1].final_pred, 1);
}

}  // namespace
}  // namespace entropy_lab::tta
