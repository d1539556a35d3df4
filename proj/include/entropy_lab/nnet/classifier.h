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

#ifndef ENTROPY_LAB_NNET_CLASSIFIER_H_
#define ENTROPY_LAB_NNET_CLASSIFIER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "entropy_lab/numcore/mat.h"
#include "entropy_lab/numcore/random.h"

namespace entropy_lab::nnet {

enum class LayerKind : std::uint8_t { kLinear = 1, kBatchNorm = 2, kReLU = 3 };

struct LayerSpec {
  LayerKind kind = LayerKind::kReLU;
  // Linear: in -> out. BatchNorm: in == out == dim. ReLU: 0/0 (width inherited).
  std::size_t in = 0;
  std::size_t out = 0;

  static LayerSpec Linear(std::size_t in, std::size_t out) {
    return {LayerKind::kLinear, in, out};
  }
  static LayerSpec BatchNorm(std::size_t dim) {
    return {LayerKind::kBatchNorm, dim, dim};
  }
  static LayerSpec ReLU() { return {LayerKind::kReLU, 0, 0}; }

  bool operator==(const LayerSpec&) const = default;
};

// d -> Linear(d,h) -> BN -> ReLU -> Linear(h,h) -> BN -> ReLU -> Linear(h,C).
std::vector<LayerSpec> DefaultArchitecture(std::size_t input_dim,
                                           std::size_t num_classes,
                                           std::size_t hidden = 64);

// Throws DimensionError unless dimensions chain, the stack ends with a Linear
// and contains at least one BatchNorm.
void ValidateArchitecture(std::span<const LayerSpec> layers);

enum class BnMode {
  kBatchStats,   // normalize by the current batch (training and adaptation)
  kFrozenStats,  // normalize by stored population statistics
};

// Feedforward classifier. All parameters live in one flat vector laid out in
// layer order: Linear -> W (in x out, row-major) then b; BatchNorm -> gamma
// then beta. Population statistics for frozen-stats mode are kept in a
// separate buffer (mean then var per BatchNorm) and are not parameters.
class Classifier {
 public:
  struct Slot {
    std::size_t param_offset = 0;  // W or gamma
    std::size_t param_offset2 = 0;  // b or beta
    std::size_t stats_offset = 0;   // BN running mean; var follows
  };

  // He-normal weights, zero biases, gamma = 1, beta = 0, running mean 0 and
  // running var 1.
  static Classifier Create(std::vector<LayerSpec> layers, numcore::Seed seed,
                           double bn_epsilon = 1e-5);
  // Restores a classifier from raw buffers; used by deserialization.
  static Classifier FromBuffers(std::vector<LayerSpec> layers, double bn_epsilon,
                                std::vector<double> params,
                                std::vector<double> stats);

  const std::vector<LayerSpec>& layers() const { return layers_; }
  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t input_dim() const { return layers_.front().in; }
  std::size_t num_classes() const { return layers_.back().out; }
  std::size_t embedding_dim() const { return layers_.back().in; }
  double bn_epsilon() const { return bn_epsilon_; }

  std::span<const double> params() const { return params_; }
  std::span<const double> stats() const { return stats_; }
  // Mutable views bump the version, which invalidates outstanding caches.
  std::span<double> mutable_params();
  std::span<double> mutable_stats();

  std::uint64_t version() const { return version_; }

 private:
  Classifier() = default;
  void Layout();

  std::vector<LayerSpec> layers_;
  std::vector<Slot> slots_;
  double bn_epsilon_ = 1e-5;
  std::vector<double> params_;
  std::vector<double> stats_;
  std::uint64_t version_ = 0;
};

// Adaptable = every BatchNorm gamma/beta; frozen = everything else. The
// AllParameters variant is used for supervised pretraining.
class ParamPartition {
 public:
  static ParamPartition BatchNormAffine(const Classifier& net);
  static ParamPartition AllParameters(const Classifier& net);

  const std::vector<std::size_t>& adaptable() const { return adaptable_; }
  const std::vector<std::size_t>& frozen() const { return frozen_; }
  bool IsAdaptable(std::size_t index) const { return mask_[index] != 0; }
  std::size_t num_params() const { return mask_.size(); }

 private:
  std::vector<std::size_t> adaptable_;
  std::vector<std::size_t> frozen_;
  std::vector<char> mask_;
};

struct ForwardCache {
  std::uint64_t version = 0;
  BnMode mode = BnMode::kBatchStats;
  // Input to each layer.
  std::vector<numcore::Mat> inputs;
  // BatchNorm only: normalized pre-affine activations, 1/sqrt(var+eps), batch
  // mean and (biased) batch variance.
  std::vector<numcore::Mat> xhat;
  std::vector<std::vector<double>> inv_std;
  std::vector<std::vector<double>> batch_mean;
  std::vector<std::vector<double>> batch_var;
};

struct ForwardResult {
  numcore::Mat logits;
  numcore::Mat embedding;  // input of the final Linear
  ForwardCache cache;
};

// Throws DimensionError on an input width mismatch and PreconditionError for a
// single-row batch in batch-stats mode.
ForwardResult Forward(const Classifier& net, const numcore::Mat& x, BnMode mode);

// Gradient over the full flat parameter vector; only `active` entries were
// computed, all others are zero.
struct Gradients {
  std::vector<double> values;
  std::vector<std::size_t> active;
};

// Backpropagates dloss/dlogits. Throws PreconditionError if the cache was
// produced for a different parameter version.
Gradients Backward(const Classifier& net, const ForwardCache& cache,
                   const numcore::Mat& dlogits, const ParamPartition& partition);

// theta <- theta - lr * g on the active entries.
void SgdStep(Classifier& net, const Gradients& grads, double lr);

struct Snapshot {
  std::vector<LayerSpec> layers;
  std::vector<double> params;
  std::vector<double> stats;
};

Snapshot TakeSnapshot(const Classifier& net);
// Throws DimensionError if the snapshot does not match the architecture.
void Restore(Classifier& net, const Snapshot& snapshot);

}  // namespace entropy_lab::nnet

#endif  // ENTROPY_LAB_NNET_CLASSIFIER_H_
