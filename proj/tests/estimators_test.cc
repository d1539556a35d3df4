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

#include "entropy_lab/estimators/baselines.h"
#include "entropy_lab/estimators/calibration.h"
#include "entropy_lab/estimators/cot.h"
#include "entropy_lab/estimators/report.h"
#include "entropy_lab/estimators/weighted_flips.h"
#include "entropy_lab/numcore/errors.h"
#include "oracles.h"

namespace entropy_lab::estimators {
namespace {

using numcore::Mat;
using numcore::Rng;
using numcore::Seed;

Mat RandomProbs(std::size_t n, std::size_t c, Rng& rng) {
  return numcore::SoftmaxRows(oracle::RandomNormal(n, c, rng));
}

TEST(BaselinesTest, AverageConfidence) {
  EXPECT_DOUBLE_EQ(AverageConfidence(Mat::FromRows({{1, 0}, {0, 1}})), 100.0);
  Mat uniform(3, 10);
  for (double& v : uniform.data()) v = 0.1;
  EXPECT_NEAR(AverageConfidence(uniform), 10.0, 1e-12);
  EXPECT_NEAR(AverageConfidence(Mat::FromRows({{0.9, 0.1}, {0.5, 0.5}})), 70.0, 1e-12);
}

TEST(BaselinesTest, DifferenceOfConfidences) {
  Mat val = Mat::FromRows({{0.8, 0.2}});
  Mat test = Mat::FromRows({{0.6, 0.4}});
  EXPECT_NEAR(DifferenceOfConfidences(val, val, 76), 76.0, 1e-12);
  EXPECT_NEAR(DifferenceOfConfidences(test, val, 76), 56.0, 1e-12);
  Mat hot = Mat::FromRows({{1.0, 0.0}});
  Mat low = Mat::FromRows({{0.5, 0.5}});
  EXPECT_EQ(DifferenceOfConfidences(hot, low, 90), 100.0);
}

TEST(BaselinesTest, AtcExamples) {
  std::vector<double> s = {0.1, 0.2, 0.8, 0.9};
  double t = AtcFit(s, {true, true, true, true});
  EXPECT_LT(t, 0.1);
  EXPECT_DOUBLE_EQ(AtcPredict(s, t), 100.0);
  t = AtcFit(s, {false, true, true, false});
  EXPECT_GT(t, 0.2);
  EXPECT_LT(t, 0.8);
  EXPECT_DOUBLE_EQ(AtcPredict(s, t), 50.0);
  t = AtcFit(s, {false, false, false, false});
  EXPECT_GT(t, 0.9);
  EXPECT_DOUBLE_EQ(AtcPredict(s, t), 0.0);
  EXPECT_DOUBLE_EQ(AtcPredict(std::vector<double>{0.3, 0.7, 0.75, 0.95}, 0.72), 50.0);
  EXPECT_THROW(AtcFit(std::vector<double>{}, {}), PreconditionError);
}

TEST(BaselinesTest, AtcThresholdMatchesValidationAccuracy) {
  Rng rng(Seed{17});
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 5 + rng.Index(300);
    std::vector<double> conf(n);
    std::vector<bool> correct(n);
    std::size_t right = 0;
    const double p = rng.Uniform();
    for (std::size_t i = 0; i < n; ++i) {
      // Coarse scores create ties.
      conf[i] = std::round(rng.Uniform() * 20) / 20;
      correct[i] = rng.Uniform() < p;
      right += correct[i];
    }
    const double thr = AtcFit(conf, correct);
    const double above = AtcPredict(conf, thr) / 100.0;
    const double acc = static_cast<double>(right) / static_cast<double>(n);
    // With tied scores the closest achievable fraction can be further than
    // 1/n; the property is checked on the achievable set.
    std::vector<double> sorted = conf;
    std::sort(sorted.begin(), sorted.end());
    double best = 1e9;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i > 0 && i < n && sorted[i] == sorted[i - 1]) continue;
      best = std::min(best, std::abs(static_cast<double>(n - i) / n - acc));
    }
    EXPECT_NEAR(std::abs(above - acc), best, 1e-12);
  }
}

TEST(BaselinesTest, AtcWithinOneOverNForDistinctScores) {
  Rng rng(Seed{18});
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 5 + rng.Index(300);
    std::vector<double> conf(n);
    std::vector<bool> correct(n);
    std::size_t right = 0;
    for (std::size_t i = 0; i < n; ++i) {
      conf[i] = rng.Uniform();
      correct[i] = rng.Uniform() < 0.7;
      right += correct[i];
    }
    const double above = AtcPredict(conf, AtcFit(conf, correct)) / 100.0;
    EXPECT_LE(std::abs(above - static_cast<double>(right) / n), 1.0 / n);
  }
}

double BruteForceCot(const Mat& probs, std::span<const double> marginal) {
  const auto counts = AllocateTargets(marginal, probs.rows());
  std::vector<std::size_t> targets;
  for (std::size_t c = 0; c < counts.size(); ++c) targets.insert(targets.end(), counts[c], c);
  Mat cost(probs.rows(), probs.rows());
  for (std::size_t i = 0; i < probs.rows(); ++i)
    for (std::size_t j = 0; j < targets.size(); ++j) cost(i, j) = OneHotCost(probs.row(i), targets[j]);
  return oracle::BruteForceAssignment(cost);
}

TEST(CotTest, MatchesBruteForce) {
  Rng rng(Seed{23});
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.Index(6);
    const std::size_t c = 2 + rng.Index(4);
    Mat probs = RandomProbs(n, c, rng);
    std::vector<double> marginal(c);
    double sum = 0.0;
    for (double& m : marginal) sum += (m = rng.Uniform(0.1, 1.0));
    for (double& m : marginal) m /= sum;
    CotResult r = Cot(probs, marginal);
    EXPECT_NEAR(r.mean_cost * static_cast<double>(n), BruteForceCot(probs, marginal), 1e-12);
    EXPECT_NEAR(r.estimate, 100.0 * (1.0 - r.mean_cost), 1e-12);
  }
}

TEST(CotTest, OneHotMatchingMarginal) {
  Mat probs = Mat::FromRows({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  std::vector<double> marginal = {0.5, 0.5};
  EXPECT_DOUBLE_EQ(Cot(probs, marginal).estimate, 100.0);
}

TEST(CotTest, UniformRows) {
  Mat probs(20, 10);
  for (double& v : probs.data()) v = 0.1;
  std::vector<double> marginal(10, 0.1);
  CotResult r = Cot(probs, marginal);
  EXPECT_NEAR(r.mean_cost, 0.9, 1e-12);
  EXPECT_NEAR(r.estimate, 10.0, 1e-9);
}

TEST(CotTest, Preconditions) {
  Mat probs = Mat::FromRows({{0.5, 0.5}});
  std::vector<double> bad = {0.5, 0.6};
  std::vector<double> three = {0.2, 0.3, 0.5};
  EXPECT_THROW(Cot(probs, bad), PreconditionError);
  EXPECT_THROW(Cot(probs, three), DimensionError);
  EXPECT_THROW(Cot(Mat(0, 2), std::vector<double>{0.5, 0.5}), PreconditionError);
}

TEST(CotTest, AllocateTargets) {
  std::vector<double> m = {0.5, 0.25, 0.25};
  EXPECT_EQ(AllocateTargets(m, 4), (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(AllocateTargets(m, 5), (std::vector<std::size_t>{3, 1, 1}));
  std::vector<double> thirds = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  EXPECT_EQ(AllocateTargets(thirds, 4), (std::vector<std::size_t>{2, 1, 1}));
}

tta::FlipTracker Tracker(std::vector<double> conf, std::vector<int> init, std::vector<int> fin) {
  Mat inputs(conf.size(), 1);
  auto t = tta::FlipTracker::FromInitial(inputs, std::move(init), std::move(conf));
  t.SetFinalPredictions(std::move(fin));
  return t;
}

TEST(WeightedFlipsTest, Examples) {
  EXPECT_EQ(WeightedFlips(Tracker({0.2, 0.5, 0.9}, {0, 1, 2}, {0, 1, 2})), 0.0);
  EXPECT_NEAR(WeightedFlips(Tracker({0.2, 0.5, 0.9}, {0, 1, 2}, {0, 0, 0})), 5.0 / 3.0, 1e-15);
  EXPECT_EQ(UnweightedFlips(Tracker({0.2, 0.5, 0.9}, {0, 1, 2}, {0, 0, 0})), 2.0);
  const std::size_t n = 40;
  std::vector<double> conf(n);
  std::vector<int> init(n, 0), fin(n, 1);
  for (std::size_t i = 0; i < n; ++i) conf[i] = 0.5 + 0.01 * static_cast<double>(i);
  EXPECT_NEAR(WeightedFlips(Tracker(conf, init, fin)), (n + 1) / 2.0, 1e-12);
}

TEST(WeightedFlipsTest, UnfinalizedThrows) {
  auto t = tta::FlipTracker::FromInitial(Mat(2, 1), {0, 1}, {0.5, 0.6});
  EXPECT_THROW(WeightedFlips(t), PreconditionError);
}

TEST(WeightedFlipsTest, LimitedScale) {
  EXPECT_DOUBLE_EQ(LimitedScale(2.0, 100), 20.0);
  EXPECT_DOUBLE_EQ(LimitedScale(2.0, 1000), 2.0);
  EXPECT_NEAR(LimitedScale(3.2, 250), 12.8, 1e-12);
  EXPECT_THROW(LimitedScale(1.0, 0), PreconditionError);
}

constexpr double kA = 0.00036, kB = -0.32, kC = 75.66;

TEST(CalibrationTest, RecoversPublishedCoefficients) {
  std::vector<FitPair> pairs;
  for (double x = 0; x <= 400; x += 20) pairs.push_back({x, kA * x * x + kB * x + kC});
  CalibrationCurve f = FitCurve(pairs, 2, true);
  ASSERT_EQ(f.coefficients.size(), 3u);
  EXPECT_NEAR(f.coefficients[0], kA, 1e-8);
  EXPECT_NEAR(f.coefficients[1], kB, 1e-8);
  EXPECT_NEAR(f.coefficients[2], kC, 1e-8);
}

TEST(CalibrationTest, PublishedCurveValues) {
  CalibrationCurve f{2, true, {kA, kB, kC}};
  EXPECT_EQ(PredictAccuracy(f, 0), 75.66);
  EXPECT_NEAR(PredictAccuracy(f, 100), 47.26, 1e-12);
  CalibrationCurve neg{1, true, {-1.0, 10.0}};
  EXPECT_EQ(PredictAccuracy(neg, 50), 0.0);
  CalibrationCurve high{1, true, {0.0, 150.0}};
  EXPECT_EQ(PredictAccuracy(high, 3), 100.0);
}

TEST(CalibrationTest, LinearInterpolatesTwoPoints) {
  CalibrationCurve f = FitCurve({{0, 80}, {10, 60}}, 1, false);
  EXPECT_NEAR(f.Evaluate(0), 80, 1e-12);
  EXPECT_NEAR(f.Evaluate(10), 60, 1e-12);
}

TEST(CalibrationTest, CollinearQuadraticHasNoCurvature) {
  std::vector<FitPair> pairs;
  for (double x = 0; x < 10; ++x) pairs.push_back({x, 3 * x + 1});
  EXPECT_NEAR(FitCurve(pairs, 2, true).coefficients[0], 0.0, 1e-8);
}

TEST(CalibrationTest, Errors) {
  EXPECT_THROW(FitCurve({{1, 2}, {1, 3}, {1, 4}}, 1, true), FitFailed);
  EXPECT_THROW(FitCurve({{1, 2}, {2, 3}}, 2, true), FitFailed);
  EXPECT_THROW(FitCurve({{1, 2}, {2, 3}}, 4, true), ConfigError);
}

TEST(CalibrationTest, CsvRoundTrip) {
  CalibrationCurve f{3, false, {1e-7, kA, kB, kC}};
  std::stringstream ss;
  WriteCurveCsv(f, ss);
  EXPECT_EQ(ReadCurveCsv(ss), f);
  EXPECT_EQ(CurveName(2, true), "weighted-quadratic");
  EXPECT_EQ(CurveName(1, false), "unweighted-linear");
}

TEST(ReportTest, Summary) {
  std::vector<EstimateRow> rows = {{"a", "AC", 50, 55, 5}, {"b", "AC", 60, 70, 10}};
  auto s = Summarize(rows);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s[0].average, 7.5);
  EXPECT_DOUBLE_EQ(s[0].worst, 10.0);
  EXPECT_DOUBLE_EQ(s[0].average_excluding_worst, 5.0);
  EXPECT_DOUBLE_EQ(MethodMae(rows, "AC"), 7.5);
  EXPECT_THROW(MethodMae(rows, "WF"), PreconditionError);
}

TEST(ReportTest, PerfectEstimatorHasZeroMae) {
  std::vector<EstimateRow> rows = {{"a", "WF", 61, 61, 0}};
  EXPECT_EQ(Summarize(rows)[0].average, 0.0);
}

TEST(ReportTest, CsvRoundTrip) {
  std::vector<EstimateRow> rows = {{"a", "AC", 50.25, 55, 4.75}, {"ext", "COT", 12, {}, {}}};
  std::stringstream ss;
  WriteReportCsv(rows, ss);
  EXPECT_EQ(ReadReportCsv(ss), rows);
}

TEST(ReportTest, MethodNames) {
  for (Method m : AllMethods()) EXPECT_EQ(ParseMethod(MethodName(m)), m);
  EXPECT_THROW(ParseMethod("XYZ"), ConfigError);
}

}  // namespace
}  // namespace entropy_lab::estimators
