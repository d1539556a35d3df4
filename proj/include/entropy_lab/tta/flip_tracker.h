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

#ifndef ENTROPY_LAB_TTA_FLIP_TRACKER_H_
#define ENTROPY_LAB_TTA_FLIP_TRACKER_H_

#include <cstddef>
#include <vector>

#include "entropy_lab/nnet/classifier.h"
#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::tta {

// Fixed set of tracked inputs with the unadapted model's predictions and
// confidences, and the predictions at the stopping iteration.
class FlipTracker {
 public:
  FlipTracker() = default;

  // Initial predictions come from the pretrained model with frozen
  // statistics. Percentile c_i = average rank of confidence_i / N, in (0, 1].
  static FlipTracker Initialize(const nnet::Classifier& pretrained,
                                numcore::Mat tracked_inputs);
  // Builds a tracker from precomputed initial predictions/confidences.
  static FlipTracker FromInitial(numcore::Mat tracked_inputs,
                                 std::vector<int> initial_predictions,
                                 std::vector<double> initial_confidences);

  // Records the current model's predictions (batch statistics, chunks of
  // `batch_size`).
  void Finalize(const nnet::Classifier& current, std::size_t batch_size);
  void SetFinalPredictions(std::vector<int> predictions);

  // Tracker over the first n tracked rows, percentiles re-ranked within them.
  FlipTracker Prefix(std::size_t n) const;

  bool finalized() const { return finalized_; }
  std::size_t size() const { return initial_predictions_.size(); }
  const numcore::Mat& inputs() const { return inputs_; }
  const std::vector<int>& initial_predictions() const { return initial_predictions_; }
  const std::vector<double>& initial_confidences() const { return initial_confidences_; }
  const std::vector<double>& percentiles() const { return percentiles_; }
  const std::vector<int>& final_predictions() const { return final_predictions_; }

  // Throws PreconditionError before Finalize.
  std::vector<bool> Flipped() const;
  std::size_t FlipCount() const;

 private:
  numcore::Mat inputs_;
  std::vector<int> initial_predictions_;
  std::vector<double> initial_confidences_;
  std::vector<double> percentiles_;
  std::vector<int> final_predictions_;
  bool finalized_ = false;
};

}  // namespace entropy_lab::tta

#endif  // ENTROPY_LAB_TTA_FLIP_TRACKER_H_
