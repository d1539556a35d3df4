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

#ifndef ENTROPY_LAB_TTA_ADAPT_H_
#define ENTROPY_LAB_TTA_ADAPT_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "entropy_lab/datagen/labeled_set.h"
#include "entropy_lab/nnet/classifier.h"
#include "entropy_lab/numcore/random.h"
#include "entropy_lab/tta/config.h"
#include "entropy_lab/tta/flip_tracker.h"

namespace entropy_lab::tta {

struct AdaptState {
  std::size_t iteration = 0;
  nnet::Classifier net;
  nnet::Snapshot pretrained;
  // EMA of batch-mean logits; present iff iteration >= 1 (and not cleared by
  // a reset).
  std::optional<std::vector<double>> ema;
  std::vector<std::size_t> reset_iterations;

  static AdaptState Begin(const nnet::Classifier& pretrained);
};

struct StepInfo {
  double loss = 0.0;
  std::size_t kept = 0;  // samples with non-zero weight
};

// One adaptation step: batch-stats forward, per-sample weights (1 for Tent,
// S_ent * S_div for RDumb), weighted entropy backward onto the BatchNorm
// affine parameters, one SGD step, EMA update (RDumb), iteration += 1.
StepInfo TtaStep(AdaptState& state, const numcore::Mat& batch, const TtaConfig& cfg);

// Restores the pretrained snapshot when iteration > 0 and iteration is a
// multiple of reset_period. Returns whether a reset happened.
bool MaybeReset(AdaptState& state, const TtaConfig& cfg);

struct EvalDiagnostics {
  std::optional<double> silhouette;
  std::optional<double> shift_distance;
  std::optional<numcore::Mat> projection;  // n x 2
};

// Called at every evaluation point with the holdout embeddings of the current
// model, the holdout labels and the accuracy just measured.
using EvalHook = std::function<EvalDiagnostics(
    const numcore::Mat& embedding, const std::vector<int>& labels, std::size_t iter,
    double holdout_acc)>;

struct TraceRecord {
  std::size_t iter = 0;
  std::optional<double> holdout_acc;
  std::optional<double> mean_entropy;
  std::optional<double> silhouette;
  std::optional<double> shift_distance;
  std::optional<numcore::Mat> projection;
};

struct Trace {
  std::vector<TraceRecord> records;  // strictly increasing iter, first at 0
  std::vector<std::size_t> reset_iterations;
};

struct AdaptResult {
  Trace trace;
  FlipTracker tracker;
};

// Adapts a copy of `net` on `stream` for cfg.stop_iter steps. The first
// epoch consumes the stream in order, later epochs are reshuffled from
// `seed`; incomplete trailing batches are skipped. Holdout accuracy and mean
// entropy (batch statistics) are recorded at iteration 0 and every
// eval_interval; an empty holdout disables them. The tracker covers the first
// track_n stream rows (the whole stream, with a warning, if shorter).
AdaptResult Adapt(const nnet::Classifier& net, const datagen::LabeledSet& stream,
                  const datagen::LabeledSet& holdout, const TtaConfig& cfg,
                  numcore::Seed seed, const EvalHook& hook = nullptr);

}  // namespace entropy_lab::tta

#endif  // ENTROPY_LAB_TTA_ADAPT_H_
