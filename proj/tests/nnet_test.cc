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
#include "entropy_lab/nnet/classifier.h"
#include "entropy_lab/nnet/losses.h"
#include "entropy_lab/nnet/serialize.h"
#include "entropy_lab/nnet/train.h"
#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/finite_diff.h"
#include "oracles.h"

namespace entropy_lab::nnet {
namespace {

using numcore::Mat;
using numcore::Rng;
using numcore::Seed;

TEST(LossTest, EntropyExamples) {
  std::vector<double> w1 = {1.0};
  EXPECT_NEAR(EntropyLoss(Mat::FromRows({{60, 0, 0}}), w1).loss, 0.0, 1e-10);
  EXPECT_NEAR(EntropyLoss(Mat::FromRows({{1, 1, 1, 1}}), w1).loss, std::log(4.0), 1e-12);
  EXPECT_NEAR(EntropyLoss(Mat::FromRows({{std::log(3.0), 0}}), w1).loss, 0.562335, 1e-6);
}

TEST(LossTest, EntropyGradientMatchesFiniteDifferences) {
  Rng rng(Seed{2});
  Mat z = oracle::RandomNormal(5, 4, rng);
  std::vector<double> w = {1.0, 0.5, 0.0, 2.0, 1.5};
  LossAndGrad lg = EntropyLoss(z, w);
  std::vector<double> flat(z.data().begin(), z.data().end());
  auto fd = numcore::FiniteDiffGrad(
      [&](std::span<const double> v) {
        return EntropyLoss(Mat(5, 4, std::vector<double>(v.begin(), v.end())), w).loss;
      },
      flat, 1e-6);
  for (std::size_t i = 0; i < fd.size(); ++i) EXPECT_NEAR(lg.dlogits.data()[i], fd[i], 1e-8);
}

TEST(LossTest, CrossEntropyGradientMatchesFiniteDifferences) {
  Rng rng(Seed{3});
  Mat z = oracle::RandomNormal(4, 3, rng);
  std::vector<int> y = {0, 2, 1, 2};
  LossAndGrad lg = CrossEntropyLoss(z, y);
  std::vector<double> flat(z.data().begin(), z.data().end());
  auto fd = numcore::FiniteDiffGrad(
      [&](std::span<const double> v) {
        return CrossEntropyLoss(Mat(4, 3, std::vector<double>(v.begin(), v.end())), y).loss;
      },
      flat, 1e-6);
  for (std::size_t i = 0; i < fd.size(); ++i) EXPECT_NEAR(lg.dlogits.data()[i], fd[i], 1e-8);
}

std::vector<LayerSpec> SmallNet(std::size_t d, std::size_t h, std::size_t c, int hidden_layers) {
  std::vector<LayerSpec> layers;
  std::size_t in = d;
  for (int l = 0; l < hidden_layers; ++l) {
    layers.push_back(LayerSpec::Linear(in, h));
    layers.push_back(LayerSpec::BatchNorm(h));
    layers.push_back(LayerSpec::ReLU());
    in = h;
  }
  layers.push_back(LayerSpec::Linear(in, c));
  return layers;
}

// Randomizes gamma/beta so the check does not sit at the identity.
void PerturbAffine(Classifier& net, Rng& rng) {
  auto partition = ParamPartition::BatchNormAffine(net);
  auto p = net.mutable_params();
  for (std::size_t i : partition.adaptable()) p[i] += rng.Uniform(-0.5, 0.5);
}

TEST(GradientTest, BatchNormAffineMatchesFiniteDifferences) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(Seed{s});
    const std::size_t d = 2 + rng.Index(15), h = 2 + rng.Index(15), c = 2 + rng.Index(6);
    Classifier net = Classifier::Create(SmallNet(d, h, c, 1 + static_cast<int>(s % 2)), Seed{s});
    PerturbAffine(net, rng);
    Mat x = oracle::RandomNormal(8, d, rng);
    std::vector<double> w(8, 1.0);
    auto partition = ParamPartition::BatchNormAffine(net);

    ForwardResult fr = Forward(net, x, BnMode::kBatchStats);
    Gradients g = Backward(net, fr.cache, EntropyLoss(fr.logits, w).dlogits, partition);

    std::vector<double> theta;
    for (std::size_t i : partition.adaptable()) theta.push_back(net.params()[i]);
    Classifier probe = net;
    auto loss = [&](std::span<const double> v) {
      auto p = probe.mutable_params();
      for (std::size_t k = 0; k < v.size(); ++k) p[partition.adaptable()[k]] = v[k];
      return EntropyLoss(Forward(probe, x, BnMode::kBatchStats).logits, w).loss;
    };
    auto fd = numcore::FiniteDiffGrad(loss, theta, 1e-5);
    for (std::size_t k = 0; k < fd.size(); ++k) {
      const double a = g.values[partition.adaptable()[k]];
      EXPECT_LT(std::abs(a - fd[k]), 1e-4 * std::max(1.0, std::abs(fd[k]))) << "seed " << s;
    }
    for (std::size_t i : partition.frozen()) EXPECT_EQ(g.values[i], 0.0);
  }
}

TEST(GradientTest, AllParametersMatchFiniteDifferences) {
  Rng rng(Seed{77});
  Classifier net = Classifier::Create(SmallNet(3, 5, 3, 2), Seed{77});
  Mat x = oracle::RandomNormal(6, 3, rng);
  std::vector<int> y = {0, 1, 2, 0, 1, 2};
  auto partition = ParamPartition::AllParameters(net);
  ForwardResult fr = Forward(net, x, BnMode::kBatchStats);
  Gradients g = Backward(net, fr.cache, CrossEntropyLoss(fr.logits, y).dlogits, partition);
  std::vector<double> theta(net.params().begin(), net.params().end());
  Classifier probe = net;
  auto fd = numcore::FiniteDiffGrad(
      [&](std::span<const double> v) {
        std::copy(v.begin(), v.end(), probe.mutable_params().begin());
        return CrossEntropyLoss(Forward(probe, x, BnMode::kBatchStats).logits, y).loss;
      },
      theta, 1e-5);
  for (std::size_t i = 0; i < fd.size(); ++i) EXPECT_NEAR(g.values[i], fd[i], 1e-6);
}

TEST(GradientTest, ZeroUpstreamGivesZero) {
  Rng rng(Seed{1});
  Classifier net = Classifier::Create(SmallNet(4, 6, 3, 1), Seed{1});
  Mat x = oracle::RandomNormal(5, 4, rng);
  ForwardResult fr = Forward(net, x, BnMode::kBatchStats);
  Gradients g = Backward(net, fr.cache, Mat(5, 3), ParamPartition::AllParameters(net));
  for (double v : g.values) EXPECT_EQ(v, 0.0);
}

TEST(GradientTest, StaleCacheRejected) {
  Rng rng(Seed{1});
  Classifier net = Classifier::Create(SmallNet(4, 6, 3, 1), Seed{1});
  ForwardResult fr = Forward(net, oracle::RandomNormal(5, 4, rng), BnMode::kBatchStats);
  net.mutable_params()[0] += 1.0;
  EXPECT_THROW(Backward(net, fr.cache, Mat(5, 3), ParamPartition::AllParameters(net)),
               PreconditionError);
}

TEST(ForwardTest, ZeroFinalLinearGivesZeroLogits) {
  Rng rng(Seed{4});
  Classifier net = Classifier::Create(SmallNet(4, 6, 3, 1), Seed{4});
  const auto& slot = net.slots().back();
  auto p = net.mutable_params();
  std::fill(p.begin() + static_cast<std::ptrdiff_t>(slot.param_offset), p.end(), 0.0);
  Mat logits = Forward(net, oracle::RandomNormal(5, 4, rng), BnMode::kBatchStats).logits;
  for (double v : logits.data()) EXPECT_EQ(v, 0.0);
}

TEST(ForwardTest, Deterministic) {
  Rng rng(Seed{5});
  Mat x = oracle::RandomNormal(7, 4, rng);
  Classifier a = Classifier::Create(SmallNet(4, 6, 3, 2), Seed{9});
  Classifier b = Classifier::Create(SmallNet(4, 6, 3, 2), Seed{9});
  EXPECT_EQ(Forward(a, x, BnMode::kBatchStats).logits, Forward(b, x, BnMode::kBatchStats).logits);
  EXPECT_EQ(Forward(a, x, BnMode::kFrozenStats).logits, Forward(a, x, BnMode::kFrozenStats).logits);
}

TEST(ForwardTest, Errors) {
  Classifier net = Classifier::Create(SmallNet(4, 6, 3, 1), Seed{1});
  EXPECT_THROW(Forward(net, Mat(3, 5), BnMode::kBatchStats), DimensionError);
  EXPECT_THROW(Forward(net, Mat(1, 4), BnMode::kBatchStats), PreconditionError);
  EXPECT_NO_THROW(Forward(net, Mat(1, 4), BnMode::kFrozenStats));
}

TEST(ArchitectureTest, Validation) {
  EXPECT_NO_THROW(ValidateArchitecture(DefaultArchitecture(8, 4)));
  std::vector<LayerSpec> no_bn = {LayerSpec::Linear(4, 3)};
  EXPECT_THROW(ValidateArchitecture(no_bn), DimensionError);
  std::vector<LayerSpec> broken = {LayerSpec::Linear(4, 5), LayerSpec::BatchNorm(6),
                                   LayerSpec::Linear(6, 2)};
  EXPECT_THROW(ValidateArchitecture(broken), DimensionError);
}

TEST(SgdTest, Examples) {
  Classifier net = Classifier::Create(SmallNet(2, 2, 2, 1), Seed{1});
  auto partition = ParamPartition::AllParameters(net);
  Gradients g{std::vector<double>(net.params().size(), 2.0), partition.adaptable()};
  const std::vector<double> before(net.params().begin(), net.params().end());
  SgdStep(net, g, 0.0);
  EXPECT_TRUE(std::equal(before.begin(), before.end(), net.params().begin()));
  net.mutable_params()[0] = 1.0;
  SgdStep(net, g, 0.25);
  EXPECT_EQ(net.params()[0], 0.5);
}

TEST(SnapshotTest, RestoreIsBitExact) {
  Classifier net = Classifier::Create(DefaultArchitecture(4, 3, 8), Seed{2});
  Snapshot snap = TakeSnapshot(net);
  for (double& v : net.mutable_params()) v += 0.125;
  for (double& v : net.mutable_stats()) v *= 2.0;
  Restore(net, snap);
  EXPECT_TRUE(std::equal(snap.params.begin(), snap.params.end(), net.params().begin()));
  EXPECT_TRUE(std::equal(snap.stats.begin(), snap.stats.end(), net.stats().begin()));
  Classifier other = Classifier::Create(DefaultArchitecture(5, 3, 8), Seed{2});
  EXPECT_THROW(Restore(other, snap), DimensionError);
}

TEST(SerializeTest, RoundTrip) {
  Classifier net = Classifier::Create(DefaultArchitecture(4, 3, 8), Seed{3});
  std::stringstream ss;
  WriteClassifier(net, ss);
  Classifier back = ReadClassifier(ss);
  EXPECT_EQ(back.layers(), net.layers());
  EXPECT_TRUE(std::equal(net.params().begin(), net.params().end(), back.params().begin()));
  EXPECT_TRUE(std::equal(net.stats().begin(), net.stats().end(), back.stats().begin()));
}

TEST(SerializeTest, RejectsGarbage) {
  std::stringstream bad("not a model");
  EXPECT_THROW(ReadClassifier(bad), ParseError);
  EXPECT_THROW(LoadClassifier("/nonexistent/model.bin"), PreconditionError);
}

datagen::LabeledSet TwoBlobs(std::size_t n, Seed seed) {
  Rng rng(seed);
  datagen::LabeledSet s;
  s.features = Mat(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const int y = static_cast<int>(i % 2);
    s.labels.push_back(y);
    s.features(i, 0) = (y == 0 ? -3.0 : 3.0) + rng.Normal(0, 0.5);
    s.features(i, 1) = rng.Normal();
  }
  return s;
}

TEST(PretrainTest, SeparableReachesHighAccuracy) {
  Classifier net = Classifier::Create(DefaultArchitecture(2, 2, 16), Seed{1});
  PretrainConfig cfg;
  cfg.epochs = 10;
  PretrainResult r = Pretrain(net, TwoBlobs(400, Seed{1}), TwoBlobs(200, Seed{2}), cfg, Seed{3});
  EXPECT_GE(r.val_accuracy, 0.99);
}

TEST(PretrainTest, ZeroEpochsLeavesNetUnchanged) {
  Classifier net = Classifier::Create(DefaultArchitecture(2, 2, 16), Seed{1});
  const std::vector<double> before(net.params().begin(), net.params().end());
  PretrainConfig cfg;
  cfg.epochs = 0;
  cfg.accuracy_floor = 0.0;
  Pretrain(net, TwoBlobs(100, Seed{1}), TwoBlobs(50, Seed{2}), cfg, Seed{3});
  EXPECT_TRUE(std::equal(before.begin(), before.end(), net.params().begin()));
}

TEST(PretrainTest, SameSeedSameSnapshot) {
  auto run = [] {
    Classifier net = Classifier::Create(DefaultArchitecture(2, 2, 16), Seed{1});
    PretrainConfig cfg;
    cfg.epochs = 3;
    return Pretrain(net, TwoBlobs(200, Seed{1}), TwoBlobs(50, Seed{2}), cfg, Seed{3}).snapshot;
  };
  Snapshot a = run(), b = run();
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.stats, b.stats);
}

TEST(PretrainTest, FloorViolationReportsAccuracy) {
  Classifier net = Classifier::Create(DefaultArchitecture(2, 2, 16), Seed{1});
  datagen::LabeledSet noise = TwoBlobs(200, Seed{1});
  Rng rng(Seed{9});
  for (auto& y : noise.labels) y = static_cast<int>(rng.Index(2));
  PretrainConfig cfg;
  cfg.epochs = 1;
  cfg.accuracy_floor = 0.99;
  try {
    Pretrain(net, noise, noise, cfg, Seed{3});
    FAIL();
  } catch (const PretrainingFailed& e) {
    EXPECT_LT(e.accuracy(), 0.99);
  }
}

}  // namespace
}  // namespace entropy_lab::nnet
