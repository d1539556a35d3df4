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

#ifndef ENTROPY_LAB_NNET_TRAIN_H_
#define ENTROPY_LAB_NNET_TRAIN_H_

#include <cstddef>
#include <vector>

#include "entropy_lab/datagen/labeled_set.h"
#include "entropy_lab/nnet/classifier.h"
#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::nnet {

struct Predictions {
  numcore::Mat logits;
  numcore::Mat embedding;
};

// Forward over all rows. In batch-stats mode rows are processed in contiguous
// chunks of `batch_size`; a trailing chunk of a single row is merged into the
// previous chunk so every chunk has a defined variance.
Predictions PredictBatched(const Classifier& net, const numcore::Mat& x,
                           BnMode mode, std::size_t batch_size);

double EvaluateAccuracy(const Classifier& net, const datagen::LabeledSet& set,
                        BnMode mode, std::size_t batch_size = 64);

// Sets every BatchNorm's stored statistics to the statistics of `x` seen as a
// single batch, layer by layer.
void CalibrateBatchNormStats(Classifier& net, const numcore::Mat& x);

struct PretrainConfig {
  std::size_t epochs = 30;
  double lr = 0.05;
  double momentum = 0.9;
  std::size_t batch_size = 64;
  // Minimum clean-validation accuracy (frozen stats); 0 disables the check.
  double accuracy_floor = 0.90;
};

struct PretrainResult {
  Snapshot snapshot;
  double val_accuracy = 0.0;
};

class PretrainingFailed : public PreconditionError {
 public:
  explicit PretrainingFailed(double accuracy);
  double accuracy() const { return accuracy_; }

 private:
  double accuracy_;
};

// Cross-entropy minibatch SGD over all parameters, then calibrates BatchNorm
// statistics on the full training set. Zero epochs leaves `net` untouched.
PretrainResult Pretrain(Classifier& net, const datagen::LabeledSet& train,
                        const datagen::LabeledSet& val, const PretrainConfig& cfg,
                        numcore::Seed seed);

}  // namespace entropy_lab::nnet

#endif  // ENTROPY_LAB_NNET_TRAIN_H_
