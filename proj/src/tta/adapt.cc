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

#include "entropy_lab/tta/adapt.h"

#include <spdlog/spdlog.h>

#include "entropy_lab/nnet/losses.h"
#include "entropy_lab/nnet/train.h"
#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/stats.h"
#include "entropy_lab/tta/filters.h"

namespace entropy_lab::tta {

using numcore::Mat;

AdaptState AdaptState::Begin(const nnet::Classifier& pretrained) {
  return AdaptState{0, pretrained, nnet::TakeSnapshot(pretrained), std::nullopt, {}};
}

StepInfo TtaStep(AdaptState& state, const Mat& batch, const TtaConfig& cfg) {
  if (batch.rows() < 2) throw PreconditionError("tta_step: batch size must be >= 2");
  const auto partition = nnet::ParamPartition::BatchNormAffine(state.net);
  auto fwd = nnet::Forward(state.net, batch, nnet::BnMode::kBatchStats);
  const std::size_t n = batch.rows();

  std::vector<double> weights(n, 1.0);
  if (cfg.method == Method::kRdumb && !cfg.force_unit_weights) {
    const auto ent = EntropyWeights(nnet::RowEntropies(fwd.logits), cfg.e0);
    const auto div = DiversityMask(fwd.logits, state.ema, cfg.eps_div);
    for (std::size_t i = 0; i < n; ++i) weights[i] = ent[i] * div[i];
  }
  StepInfo info;
  for (double w : weights) info.kept += w > 0.0 ? 1 : 0;

  const auto loss = nnet::EntropyLoss(fwd.logits, weights);
  info.loss = loss.loss;
  const auto grads = nnet::Backward(state.net, fwd.cache, loss.dlogits, partition);
  nnet::SgdStep(state.net, grads, cfg.lr);

  if (cfg.method == Method::kRdumb) {
    state.ema = EmaUpdate(state.ema, numcore::ColumnMeans(fwd.logits), cfg.alpha);
  }
  ++state.iteration;
  return info;
}

bool MaybeReset(AdaptState& state, const TtaConfig& cfg) {
  if (state.iteration == 0 || state.iteration % cfg.reset_period != 0) return false;
  nnet::Restore(state.net, state.pretrained);
  if (cfg.clear_ema_on_reset) state.ema.reset();
  state.reset_iterations.push_back(state.iteration);
  return true;
}

namespace {

TraceRecord Evaluate(const nnet::Classifier& net, const datagen::LabeledSet& holdout,
                     const TtaConfig& cfg, std::size_t iter, const EvalHook& hook) {
  TraceRecord rec;
  rec.iter = iter;
  if (holdout.size() < 2) return rec;
  const auto pred =
      nnet::PredictBatched(net, holdout.features, nnet::BnMode::kBatchStats,
                           cfg.batch_size);
  rec.holdout_acc = datagen::Accuracy(numcore::ArgmaxRows(pred.logits), holdout.labels);
  const auto ent = nnet::RowEntropies(pred.logits);
  rec.mean_entropy = numcore::Mean(ent);
  if (hook) {
    auto diag = hook(pred.embedding, holdout.labels, iter, *rec.holdout_acc);
    rec.silhouette = diag.silhouette;
    rec.shift_distance = diag.shift_distance;
    rec.projection = std::move(diag.projection);
  }
  return rec;
}

}  // namespace

AdaptResult Adapt(const nnet::Classifier& net, const datagen::LabeledSet& stream,
                  const datagen::LabeledSet& holdout, const TtaConfig& cfg,
                  numcore::Seed seed, const EvalHook& hook) {
  cfg.Validate();
  if (stream.size() == 0) throw PreconditionError("adapt: empty test stream");
  if (stream.size() < cfg.batch_size)
    throw PreconditionError("adapt: stream has fewer rows than one batch");

  std::size_t track_n = cfg.track_n;
  if (track_n > stream.size()) {
    spdlog::warn("adapt: track_n {} exceeds stream size {}; tracking the full stream",
                 track_n, stream.size());
    track_n = stream.size();
  }
  std::vector<std::size_t> tracked(track_n);
  for (std::size_t i = 0; i < track_n; ++i) tracked[i] = i;

  AdaptResult result;
  result.tracker = FlipTracker::Initialize(net, stream.features.SelectRows(tracked));

  AdaptState state = AdaptState::Begin(net);
  result.trace.records.push_back(Evaluate(state.net, holdout, cfg, 0, hook));

  numcore::Rng rng(seed.Derive("tta.stream"));
  std::vector<std::size_t> order(stream.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::size_t cursor = 0;
  std::vector<std::size_t> batch_idx(cfg.batch_size);

  if (cfg.stop_iter == 0) result.tracker.SetFinalPredictions(result.tracker.initial_predictions());
  while (state.iteration < cfg.stop_iter) {
    if (cursor + cfg.batch_size > order.size()) {
      rng.Shuffle(order);
      cursor = 0;
    }
    std::copy_n(order.begin() + static_cast<std::ptrdiff_t>(cursor), cfg.batch_size,
                batch_idx.begin());
    cursor += cfg.batch_size;
    TtaStep(state, stream.features.SelectRows(batch_idx), cfg);

    if (state.iteration == cfg.stop_iter) {
      result.tracker.Finalize(state.net, cfg.batch_size);
    }
    if (cfg.method == Method::kRdumb) MaybeReset(state, cfg);
    if (state.iteration % cfg.eval_interval == 0) {
      result.trace.records.push_back(
          Evaluate(state.net, holdout, cfg, state.iteration, hook));
    }
  }
  result.trace.reset_iterations = state.reset_iterations;
  return result;
}

}  // namespace entropy_lab::tta
