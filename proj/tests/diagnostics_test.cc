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
#include <vector>

#include <gtest/gtest.h>

#include "entropy_lab/datagen/labeled_set.h"
#include "entropy_lab/diagnostics/exclusion.h"
#include "entropy_lab/diagnostics/hungarian.h"
#include "entropy_lab/diagnostics/kmeans.h"
#include "entropy_lab/diagnostics/phase.h"
#include "entropy_lab/diagnostics/shift.h"
#include "entropy_lab/diagnostics/silhouette.h"
#include "entropy_lab/nnet/classifier.h"
#include "entropy_lab/numcore/errors.h"
#include "oracles.h"

namespace entropy_lab::diagnostics {
namespace {

using numcore::Mat;
using numcore::Rng;
using numcore::Seed;

// Linear(identity) -> BN(identity) -> Linear(identity): logits equal the
// input up to the BN epsilon.
nnet::Classifier IdentityNet(std::size_t d) {
  using nnet::LayerSpec;
  std::vector<LayerSpec> layers = {LayerSpec::Linear(d, d), LayerSpec::BatchNorm(d),
                                   LayerSpec::Linear(d, d)};
  std::vector<double> params;
  auto eye = [&] {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) params.push_back(i == j ? 1.0 : 0.0);
    params.insert(params.end(), d, 0.0);
  };
  eye();
  params.insert(params.end(), d, 1.0);
  params.insert(params.end(), d, 0.0);
  eye();
  std::vector<double> stats(d, 0.0);
  stats.insert(stats.end(), d, 1.0);
  return nnet::Classifier::FromBuffers(layers, 1e-12, params, stats);
}

TEST(HungarianTest, ZeroDiagonal) {
  Mat c = Mat::FromRows({{0, 9, 9}, {9, 0, 9}, {9, 9, 0}});
  Assignment a = Hungarian(c);
  EXPECT_EQ(a.row_to_col, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(a.total_cost, 0.0);
}

TEST(HungarianTest, TwoByTwo) {
  Assignment a = Hungarian(Mat::FromRows({{1, 2}, {3, 1}}));
  EXPECT_EQ(a.row_to_col, (std::vector<int>{0, 1}));
  EXPECT_EQ(a.total_cost, 2.0);
}

TEST(HungarianTest, MatchesBruteForce) {
  Rng rng(Seed{11});
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.Index(7);
    Mat c(n, n);
    // Integer costs keep both sums exact.
    for (double& v : c.data()) v = static_cast<double>(rng.Index(100));
    Assignment a = Hungarian(c);
    EXPECT_EQ(a.total_cost, oracle::BruteForceAssignment(c));
    std::vector<int> used(n, 0);
    for (int col : a.row_to_col) ++used[static_cast<std::size_t>(col)];
    for (int u : used) EXPECT_EQ(u, 1);
  }
}

TEST(HungarianTest, RectangularLeavesRowsUnmatched) {
  Mat c = Mat::FromRows({{5, 1}, {1, 5}, {0, 0}});
  Assignment a = Hungarian(c);
  EXPECT_EQ(a.total_cost, 1.0);
  int unmatched = 0;
  for (int col : a.row_to_col) unmatched += col < 0;
  EXPECT_EQ(unmatched, 1);
}

TEST(SilhouetteTest, TightClustersScoreOne) {
  Mat x = Mat::FromRows({{0, 0}, {0, 0}, {5, 5}, {5, 5}});
  EXPECT_DOUBLE_EQ(Silhouette(x, {0, 0, 1, 1}), 1.0);
}

TEST(SilhouetteTest, HandExample) {
  Mat x = Mat::FromRows({{0, 0}, {0, 1}, {10, 0}, {10, 1}});
  const double b = (10.0 + std::sqrt(101.0)) / 2.0;
  EXPECT_NEAR(Silhouette(x, {0, 0, 1, 1}), (b - 1.0) / b, 1e-12);
  EXPECT_NEAR(Silhouette(x, {0, 0, 1, 1}), 0.9002, 1e-4);
}

TEST(SilhouetteTest, SingleClusterUndefined) {
  Mat x = Mat::FromRows({{0, 0}, {1, 1}});
  EXPECT_THROW(Silhouette(x, {3, 3}), UndefinedError);
}

TEST(SilhouetteTest, MatchesDirectDefinition) {
  Rng rng(Seed{5});
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng.Index(199);
    const std::size_t k = 2 + rng.Index(5);
    Mat x = oracle::RandomNormal(n, 3, rng);
    std::vector<int> label(n);
    for (auto& l : label) l = static_cast<int>(rng.Index(k));
    label[0] = 0;
    label[1] = 1;
    EXPECT_NEAR(Silhouette(x, label), oracle::DirectSilhouette(x, label), 1e-12);
  }
}

TEST(SilhouetteTest, RandomLabelsOnOneBlobNearZero) {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    Rng rng(Seed{s});
    Mat x = oracle::RandomNormal(200, 2, rng);
    std::vector<int> label(200);
    for (auto& l : label) l = static_cast<int>(rng.Index(3));
    EXPECT_LT(std::abs(Silhouette(x, label)), 0.1);
  }
}

TEST(KMeansTest, KEqualsN) {
  Mat x = Mat::FromRows({{0, 0}, {1, 3}, {-2, 4}});
  Clustering c = KMeans(x, 3, Seed{1});
  EXPECT_EQ(c.inertia, 0.0);
}

TEST(KMeansTest, KOneIsTheMean) {
  Mat x = Mat::FromRows({{0, 0}, {2, 4}, {4, -1}});
  Clustering c = KMeans(x, 1, Seed{1});
  EXPECT_NEAR(c.centroids(0, 0), 2.0, 1e-12);
  EXPECT_NEAR(c.centroids(0, 1), 1.0, 1e-12);
}

TEST(KMeansTest, TwoSeparatedPairs) {
  Mat x = Mat::FromRows({{0, 0}, {0, 2}, {100, 0}, {100, 2}});
  Clustering c = KMeans(x, 2, Seed{4});
  std::vector<double> xs = {c.centroids(0, 0), c.centroids(1, 0)};
  std::sort(xs.begin(), xs.end());
  EXPECT_DOUBLE_EQ(xs[0], 0.0);
  EXPECT_DOUBLE_EQ(xs[1], 100.0);
  EXPECT_DOUBLE_EQ(c.centroids(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(c.centroids(1, 1), 1.0);
}

TEST(KMeansTest, InertiaNeverIncreases) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(Seed{s});
    Mat x = oracle::RandomNormal(60 + rng.Index(60), 2 + rng.Index(4), rng);
    Clustering c = KMeans(x, 2 + rng.Index(6), Seed{s + 100});
    for (std::size_t i = 1; i < c.inertia_history.size(); ++i)
      EXPECT_LE(c.inertia_history[i], c.inertia_history[i - 1]);
    EXPECT_NEAR(c.inertia, Inertia(x, c.centroids, c.assignment), 1e-9);
  }
}

TEST(KMeansTest, RejectsBadK) {
  Mat x = Mat::FromRows({{0, 0}, {1, 1}});
  EXPECT_THROW(KMeans(x, 0, Seed{1}), PreconditionError);
  EXPECT_THROW(KMeans(x, 3, Seed{1}), PreconditionError);
}

TEST(ShiftTest, ClassMeans) {
  Mat e = Mat::FromRows({{1, 1}, {0, 3}, {2, 2}, {5, 5}, {9, 9}});
  Mat m = ClassMeans(e, {0, 0, 0, 1, -1}, 2);
  EXPECT_DOUBLE_EQ(m(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(m(0, 1), 2.0);
  EXPECT_DOUBLE_EQ(m(1, 0), 5.0);
  Mat dup = ClassMeans(Mat::FromRows({{3, 4}, {3, 4}, {1, 1}}), {0, 0, 1}, 2);
  EXPECT_DOUBLE_EQ(dup(0, 0), 3.0);
  EXPECT_THROW(ClassMeans(e, {0, 0, 0, 0, 0}, 2), PreconditionError);
}

TEST(ShiftTest, Examples) {
  Mat m = Mat::FromRows({{0, 0}, {4, 1}, {-3, 2}});
  EXPECT_EQ(ShiftDistance(m, m).distance, 0.0);
  Mat moved = m;
  for (std::size_t i = 0; i < 3; ++i) {
    moved(i, 0) += 3;
    moved(i, 1) += 4;
  }
  EXPECT_NEAR(ShiftDistance(m, moved).distance, 5.0, 1e-12);
  Mat perm = Mat::FromRows({{-3, 2}, {0, 0}, {4, 1}});
  ShiftResult r = ShiftDistance(m, perm);
  EXPECT_EQ(r.distance, 0.0);
  EXPECT_EQ(r.class_to_centroid, (std::vector<int>{1, 2, 0}));
  EXPECT_THROW(ShiftDistance(m, Mat(2, 2)), DimensionError);
}

TEST(ExclusionTest, TopK) {
  nnet::Classifier net = IdentityNet(3);
  datagen::LabeledSet set;
  set.features = Mat::FromRows({{3, 2, 1}, {3, 2, 1}, {3, 2, 1}, {0, 0, 0}});
  set.labels = {0, 1, 2, datagen::kNoLabel};
  EXPECT_EQ(TopKExclusion(set, net, 0).size(), 4u);
  EXPECT_EQ(TopKExclusion(set, net, 1).labels, (std::vector<int>{1, 2, datagen::kNoLabel}));
  EXPECT_EQ(TopKExclusion(set, net, 2).labels, (std::vector<int>{2, datagen::kNoLabel}));
  EXPECT_EQ(TopKExclusion(set, net, 3).labels, (std::vector<int>{datagen::kNoLabel}));
}

TEST(ExclusionTest, Entropy) {
  nnet::Classifier net = IdentityNet(2);
  datagen::LabeledSet set;
  // Entropies: ~0 for the confident row, ln 2 for the uniform one.
  set.features = Mat::FromRows({{40, 0}, {1, 1}});
  set.labels = {0, 1};
  EXPECT_EQ(EntropyExclusion(set, net, -1.0).size(), 2u);
  EXPECT_EQ(EntropyExclusion(set, net, 0.5).labels, (std::vector<int>{1}));
  EXPECT_EQ(EntropyExclusion(set, net, std::log(2.0)).size(), 0u);
}

tta::Trace TraceOf(const std::vector<double>& acc) {
  tta::Trace t;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    tta::TraceRecord r;
    r.iter = i * 10;
    r.holdout_acc = acc[i];
    t.records.push_back(r);
  }
  return t;
}

TEST(PhaseTest, RiseThenFall) {
  PhaseReport r = MakePhaseReport(TraceOf({70, 80, 60}));
  EXPECT_EQ(r.peak_record, 1u);
  EXPECT_EQ(r.peak_iter, 10u);
  EXPECT_DOUBLE_EQ(r.phase1.accuracy, 10.0);
  ASSERT_TRUE(r.phase2.has_value());
  EXPECT_DOUBLE_EQ(r.phase2->accuracy, -20.0);
  EXPECT_FALSE(r.phase1.silhouette.has_value());
}

TEST(PhaseTest, MonotoneHasNoPhaseTwo) {
  PhaseReport r = MakePhaseReport(TraceOf({1, 2, 3, 4}));
  EXPECT_EQ(r.peak_record, 3u);
  EXPECT_FALSE(r.phase2.has_value());
}

TEST(PhaseTest, ConstantPeaksAtZero) {
  EXPECT_EQ(MakePhaseReport(TraceOf({5, 5, 5})).peak_record, 0u);
  EXPECT_THROW(MakePhaseReport(TraceOf({5, 5})), PreconditionError);
}

TEST(PhaseTest, MetricDeltas) {
  tta::Trace t = TraceOf({0.5, 0.7, 0.6});
  t.records[0].silhouette = 0.1;
  t.records[1].silhouette = 0.3;
  t.records[2].silhouette = 0.2;
  PhaseReport r = MakePhaseReport(t);
  EXPECT_NEAR(*r.phase1.silhouette, 0.2, 1e-15);
  EXPECT_NEAR(*r.phase2->silhouette, -0.1, 1e-15);
}

}  // namespace
}  // namespace entropy_lab::diagnostics
