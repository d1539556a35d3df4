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

#include "entropy_lab/nnet/train.h"

#include <algorithm>
#include <string>

#include "entropy_lab/nnet/losses.h"

namespace entropy_lab::nnet {

using numcore::Mat;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> Chunks(std::size_t n,
                                                        std::size_t batch) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (batch < 2) batch = 2;
  for (std::size_t b = 0; b < n; b += batch) out.emplace_back(b, std::min(n, b + batch));
  if (out.size() > 1 && out.back().second - out.back().first < 2) {
    out[out.size() - 2].second = out.back().second;
    out.pop_back();
  }
  return out;
}

}  // namespace

Predictions PredictBatched(const Classifier& net, const Mat& x, BnMode mode,
                           std::size_t batch_size) {
  if (mode == BnMode::kFrozenStats) {
    if (x.rows() == 0) return {Mat(0, net.num_classes()), Mat(0, net.embedding_dim())};
    auto r = Forward(net, x, mode);
    return {std::move(r.logits), std::move(r.embedding)};
  }
  Predictions p{Mat(x.rows(), net.num_classes()), Mat(x.rows(), net.embedding_dim())};
  for (const auto& [begin, end] : Chunks(x.rows(), batch_size)) {
    std::vector<std::size_t> idx(end - begin);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = begin + i;
    auto r = Forward(net, x.SelectRows(idx), mode);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      std::copy(r.logits.row(i).begin(), r.logits.row(i).end(),
                p.logits.row(begin + i).begin());
      std::copy(r.embedding.row(i).begin(), r.embedding.row(i).end(),
                p.embedding.row(begin + i).begin());
    }
  }
  return p;
}

double EvaluateAccuracy(const Classifier& net, const datagen::LabeledSet& set,
                        BnMode mode, std::size_t batch_size) {
  if (set.size() == 0) return 0.0;
  const auto p = PredictBatched(net, set.features, mode, batch_size);
  return datagen::Accuracy(numcore::ArgmaxRows(p.logits), set.labels);
}

void CalibrateBatchNormStats(Classifier& net, const Mat& x) {
  const auto r = Forward(net, x, BnMode::kBatchStats);
  auto stats = net.mutable_stats();
  for (std::size_t li = 0; li < net.layers().size(); ++li) {
    if (net.layers()[li].kind != LayerKind::kBatchNorm) continue;
    const std::size_t d = net.layers()[li].out;
    const std::size_t off = net.slots()[li].stats_offset;
    for (std::size_t c = 0; c < d; ++c) {
      stats[off + c] = r.cache.batch_mean[li][c];
      stats[off + d + c] = r.cache.batch_var[li][c];
    }
  }
}

PretrainingFailed::PretrainingFailed(double accuracy)
    : PreconditionError("pretraining failed: validation accuracy " +
                        std::to_string(accuracy) + " below floor"),
      accuracy_(accuracy) {}

PretrainResult Pretrain(Classifier& net, const datagen::LabeledSet& train,
                        const datagen::LabeledSet& val, const PretrainConfig& cfg,
                        numcore::Seed seed) {
  if (cfg.epochs == 0) {
    return {TakeSnapshot(net), val.size() ? EvaluateAccuracy(net, val, BnMode::kFrozenStats) : 0.0};
  }
  if (train.size() < 2) throw PreconditionError("pretrain: need at least 2 samples");
  for (int y : train.labels)
    if (y < 0) throw PreconditionError("pretrain: unlabeled training sample");

  const auto partition = ParamPartition::AllParameters(net);
  numcore::Rng rng(seed.Derive("nnet.pretrain"));
  std::vector<double> velocity(net.params().size(), 0.0);
  const std::size_t batch = std::max<std::size_t>(2, cfg.batch_size);

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    const auto order = rng.Permutation(train.size());
    for (std::size_t b = 0; b + batch <= order.size(); b += batch) {
      std::span<const std::size_t> idx(order.data() + b, batch);
      const Mat x = train.features.SelectRows(idx);
      std::vector<int> y(batch);
      for (std::size_t i = 0; i < batch; ++i) y[i] = train.labels[idx[i]];
      auto fwd = Forward(net, x, BnMode::kBatchStats);
      const auto loss = CrossEntropyLoss(fwd.logits, y);
      auto grads = Backward(net, fwd.cache, loss.dlogits, partition);
      // Heavy-ball momentum folded into the gradient handed to the SGD step.
      for (std::size_t i : grads.active) {
        velocity[i] = cfg.momentum * velocity[i] + grads.values[i];
        grads.values[i] = velocity[i];
      }
      SgdStep(net, grads, cfg.lr);
    }
  }
  CalibrateBatchNormStats(net, train.features);

  PretrainResult result{TakeSnapshot(net), 0.0};
  result.val_accuracy = val.size() ? EvaluateAccuracy(net, val, BnMode::kFrozenStats) : 0.0;
  if (cfg.accuracy_floor > 0.0 && result.val_accuracy < cfg.accuracy_floor) {
    throw PretrainingFailed(result.val_accuracy);
  }
  return result;
}

}  // namespace entropy_lab::nnet
