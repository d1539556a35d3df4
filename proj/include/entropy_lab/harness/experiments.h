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

#ifndef ENTROPY_LAB_HARNESS_EXPERIMENTS_H_
#define ENTROPY_LAB_HARNESS_EXPERIMENTS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entropy_lab/datagen/synth.h"
#include "entropy_lab/diagnostics/phase.h"
#include "entropy_lab/emgmm/toy.h"
#include "entropy_lab/estimators/calibration.h"
#include "entropy_lab/estimators/report.h"
#include "entropy_lab/harness/config.h"
#include "entropy_lab/harness/csv.h"
#include "entropy_lab/nnet/classifier.h"
#include "entropy_lab/tta/adapt.h"

namespace entropy_lab::harness {

using NamedSet = std::pair<std::string, datagen::LabeledSet>;
using NamedSets = std::vector<NamedSet>;

// Substreams of the global seed.
struct Seeds {
  numcore::Seed root;

  numcore::Seed data() const { return root.Derive("datagen"); }
  numcore::Seed init() const { return root.Derive("nnet.init"); }
  numcore::Seed pretrain() const { return root.Derive("nnet.pretrain"); }
  numcore::Seed suite() const { return root.Derive("suite"); }
  numcore::Seed fit() const { return root.Derive("fit"); }
  numcore::Seed adapt() const { return root.Derive("adapt"); }
  numcore::Seed kmeans() const { return root.Derive("kmeans"); }
  numcore::Seed resampling() const { return root.Derive("resampling"); }
  numcore::Seed emgmm() const { return root.Derive("emgmm"); }
};

datagen::SynthWorld MakeWorld(const RunConfig& cfg);

// Source splits plus the pretrained classifier.
struct Lab {
  RunConfig cfg;
  Seeds seeds;
  datagen::SynthWorld world;
  datagen::SourceSplits source;
  nnet::Classifier pretrained;
  double val_accuracy = 0.0;  // frozen statistics, fraction
};

// Generates the source splits and pretrains. Throws PretrainingFailed when
// clean validation accuracy stays below the configured floor.
Lab BuildLab(const RunConfig& cfg);
// Uses an already trained classifier; DimensionError if it does not fit the
// configured data.
Lab BuildLab(const RunConfig& cfg, nnet::Classifier pretrained);

// "mean-shift-3", or several such names joined by '+' and applied left to
// right. Throws ConfigError on a malformed name.
std::vector<datagen::Corruption> ParseDatasetName(const std::string& name, double within_std);

// Applies the named corruption chain to `pool`. Each link takes its
// structure from the suite seed of its own name, so "mean-shift-3" moves
// classes the same way wherever it appears; `noise` drives per-row draws.
datagen::LabeledSet CorruptNamed(const Lab& lab, const datagen::LabeledSet& pool,
                                 const std::string& name, numcore::Seed noise);

NamedSets MakeSuite(const Lab& lab);
// The fitting pool: corruptions of holdout-fit (structure independent of the
// suite), plus the clean validation set as "clean-val" when configured.
NamedSets MakeFitPool(const Lab& lab);

std::vector<double> SourceMarginal(const Lab& lab);
estimators::SuiteContext MakeContext(const Lab& lab,
                                     std::optional<estimators::CalibrationCurve> curve);

// ---- Flips and the calibration curve -------------------------------------

struct FlipPoint {
  std::string dataset;
  double accuracy = 0.0;  // true accuracy, percent
  double weighted = 0.0;
  double unweighted = 0.0;
  std::size_t tracked = 0;
  // Weighted flips over the first n tracked rows, one per requested size.
  std::vector<double> prefix_weighted;
};

// One flip-measuring adaptation per dataset with `tta`; `purpose` names the
// seed substream. `prefix_sizes` requests weighted flips over tracked
// prefixes.
std::vector<FlipPoint> MeasureFlipPoints(const Lab& lab, const NamedSets& sets,
                                         const tta::TtaConfig& tta, const std::string& purpose,
                                         const std::vector<std::size_t>& prefix_sizes = {});

std::vector<estimators::FitPair> ToFitPairs(const std::vector<FlipPoint>& points, bool weighted);

// `dataset,accuracy,weighted_flips,unweighted_flips,tracked`.
Table FlipPointsTable(const std::vector<FlipPoint>& points);
std::vector<FlipPoint> FlipPointsFromTable(const Table& table);

// Scatter of (x, accuracy) with the fitted curve.
std::string FitPlotSvg(const std::vector<FlipPoint>& points,
                       const estimators::CalibrationCurve& curve);

// ---- Dynamics ------------------------------------------------------------

struct DynamicsRun {
  std::string dataset;
  tta::Trace trace;
  tta::FlipTracker tracker;
  diagnostics::PhaseReport report;
};

// Holdout drawn fresh from the world with the dataset's corruption structure.
datagen::LabeledSet DynamicsHoldout(const Lab& lab, const std::string& dataset,
                                    std::size_t per_class);

// Per-class means of the pretrained training embeddings (frozen statistics).
numcore::Mat TrainingClassMeans(const Lab& lab);

// Adapts on `stream` with dc.tta, evaluating on `holdout`. When
// dc.diagnostics is set, Silhouette and Shift distance are computed every
// dc.diagnostics_every records and always at iteration 0, the accuracy peak
// and the last record.
DynamicsRun RunDynamics(const Lab& lab, const std::string& dataset,
                        const datagen::LabeledSet& stream, const datagen::LabeledSet& holdout,
                        const DynamicsConfig& dc, numcore::Seed seed);

// The suite dataset (or compound) named in dc.dataset plus its holdout.
std::pair<datagen::LabeledSet, datagen::LabeledSet> DynamicsData(const Lab& lab,
                                                                 const std::string& dataset);

// Top-k and entropy exclusion of the evaluation rows, as configured.
datagen::LabeledSet ApplyExclusion(const Lab& lab, const datagen::LabeledSet& holdout,
                                   const DynamicsConfig& dc);

// `dataset,peak_iter,initial_accuracy,peak_accuracy,final_accuracy,
// phase1_accuracy,phase1_silhouette,phase1_shift,phase2_accuracy,
// phase2_silhouette,phase2_shift`; absent values are empty.
Table PhaseTable(const std::vector<DynamicsRun>& runs);
// `iter,id,label,pc0,pc1` for every record carrying a projection.
Table ProjectionTable(const tta::Trace& trace, const std::vector<int>& labels);
std::string TracePlotSvg(const tta::Trace& trace, const std::string& title);

// ---- Estimation ----------------------------------------------------------

struct EstimateOutcome {
  std::vector<estimators::EstimateRow> rows;
  std::vector<FlipPoint> flips;  // one per dataset when WF ran
};

EstimateOutcome EstimateSuite(const Lab& lab, const NamedSets& suite,
                              const std::optional<estimators::CalibrationCurve>& curve,
                              const std::vector<estimators::Method>& methods);

// Estimates for an external logits dump: confidence-based methods only.
std::vector<estimators::EstimateRow> EstimateFromLogits(
    const Lab& lab, const std::string& path, const std::vector<estimators::Method>& methods);

// ---- Ablations -----------------------------------------------------------

struct StopIterCell {
  std::size_t stop_iter = 0;
  estimators::CalibrationCurve curve;
  double wf_mae = 0.0;
};

struct TrackSizeCell {
  std::size_t track_n = 0;
  double wf_mae = 0.0;
  double correlation = 0.0;  // Pearson vs full tracking, scaled flips
};

struct SubsetCell {
  std::size_t size = 0;
  std::size_t resamples = 0;  // successful fits
  double mae_mean = 0.0;
  double mae_std = 0.0;
};

struct AblationResult {
  std::vector<StopIterCell> stop_iters;
  std::vector<TrackSizeCell> track_sizes;
  std::vector<SubsetCell> subsets;
};

// Stopping-iteration grid (refit per stop), tracked-set sizes (limited_scale
// against the base curve) and random fitting subsets of the pool.
AblationResult RunAblations(const Lab& lab, const NamedSets& fit_pool, const NamedSets& suite);

// ---- EM-GMM toy ----------------------------------------------------------

struct EmGmmRun {
  emgmm::InitMode init;
  std::size_t seed_index = 0;
  std::vector<int> labels;  // true cluster per sample
  emgmm::ToyTrajectory trajectory;
};

std::vector<EmGmmRun> RunEmGmm(const EmGmmConfig& cfg, numcore::Seed seed);
// Mean final ARI per arm, `arm,seeds,mean_final_ari,std_final_ari`.
Table EmGmmSummary(const std::vector<EmGmmRun>& runs);
double MeanFinalAri(const std::vector<EmGmmRun>& runs, emgmm::InitMode init);

}  // namespace entropy_lab::harness

#endif  // ENTROPY_LAB_HARNESS_EXPERIMENTS_H_
