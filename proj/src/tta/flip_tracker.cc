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

#include "entropy_lab/tta/flip_tracker.h"

#include "entropy_lab/nnet/train.h"
#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/stats.h"

namespace entropy_lab::tta {

using numcore::Mat;

FlipTracker FlipTracker::Initialize(const nnet::Classifier& pretrained,
                                    Mat tracked_inputs) {
  const auto pred = nnet::PredictBatched(pretrained, tracked_inputs,
                                         nnet::BnMode::kFrozenStats, 0);
  const Mat probs = numcore::SoftmaxRows(pred.logits);
  return FromInitial(std::move(tracked_inputs), numcore::ArgmaxRows(pred.logits),
                     numcore::MaxRows(probs));
}

FlipTracker FlipTracker::FromInitial(Mat tracked_inputs,
                                     std::vector<int> initial_predictions,
                                     std::vector<double> initial_confidences) {
  if (initial_predictions.size() != initial_confidences.size() ||
      tracked_inputs.rows() != initial_predictions.size())
    throw DimensionError("flip tracker: inconsistent tracked-set sizes");
  FlipTracker t;
  t.inputs_ = std::move(tracked_inputs);
  t.initial_predictions_ = std::move(initial_predictions);
  t.initial_confidences_ = std::move(initial_confidences);
  t.percentiles_ = numcore::AverageRanks(t.initial_confidences_);
  const double n = static_cast<double>(t.percentiles_.size());
  for (double& p : t.percentiles_) p /= n;
  return t;
}

void FlipTracker::Finalize(const nnet::Classifier& current, std::size_t batch_size) {
  if (size() == 0) {
    SetFinalPredictions({});
    return;
  }
  const auto mode = size() >= 2 ? nnet::BnMode::kBatchStats : nnet::BnMode::kFrozenStats;
  const auto pred = nnet::PredictBatched(current, inputs_, mode, batch_size);
  SetFinalPredictions(numcore::ArgmaxRows(pred.logits));
}

void FlipTracker::SetFinalPredictions(std::vector<int> predictions) {
  if (predictions.size() != size())
    throw DimensionError("flip tracker: final prediction count mismatch");
  final_predictions_ = std::move(predictions);
  finalized_ = true;
}

FlipTracker FlipTracker::Prefix(std::size_t n) const {
  n = std::min(n, size());
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  FlipTracker t = FromInitial(
      inputs_.SelectRows(idx),
      std::vector<int>(initial_predictions_.begin(), initial_predictions_.begin() + n),
      std::vector<double>(initial_confidences_.begin(),
                          initial_confidences_.begin() + n));
  if (finalized_) {
    t.SetFinalPredictions(
        std::vector<int>(final_predictions_.begin(), final_predictions_.begin() + n));
  }
  return t;
}

std::vector<bool> FlipTracker::Flipped() const {
  if (!finalized_) throw PreconditionError("flip tracker not finalized");
  std::vector<bool> f(size());
  for (std::size_t i = 0; i < size(); ++i)
    f[i] = initial_predictions_[i] != final_predictions_[i];
  return f;
}

std::size_t FlipTracker::FlipCount() const {
  std::size_t c = 0;
  for (bool b : Flipped()) c += b ? 1 : 0;
  return c;
}

}  // namespace entropy_lab::tta
