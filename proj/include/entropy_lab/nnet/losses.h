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

#ifndef ENTROPY_LAB_NNET_LOSSES_H_
#define ENTROPY_LAB_NNET_LOSSES_H_

#include <span>
#include <vector>

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::nnet {

struct LossAndGrad {
  double loss = 0.0;
  numcore::Mat dlogits;
};

// Shannon entropy (nats) of softmax(row) for every row.
std::vector<double> RowEntropies(const numcore::Mat& logits);

// loss = sum_i w_i * H(softmax(logits_i)) / n, with its exact gradient
// dH/dz_j = -p_j (log p_j + H).
LossAndGrad EntropyLoss(const numcore::Mat& logits,
                        std::span<const double> sample_weights);

// Mean cross-entropy against integer labels (all labels must be >= 0).
LossAndGrad CrossEntropyLoss(const numcore::Mat& logits, std::span<const int> labels);

}  // namespace entropy_lab::nnet

#endif  // ENTROPY_LAB_NNET_LOSSES_H_
