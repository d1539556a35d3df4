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

#include "entropy_lab/nnet/classifier.h"

#include <cmath>
#include <string>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::nnet {

using numcore::Mat;

std::vector<LayerSpec> DefaultArchitecture(std::size_t input_dim,
                                           std::size_t num_classes,
                                           std::size_t hidden) {
  return {LayerSpec::Linear(input_dim, hidden), LayerSpec::BatchNorm(hidden),
          LayerSpec::ReLU(),
          LayerSpec::Linear(hidden, hidden),    LayerSpec::BatchNorm(hidden),
          LayerSpec::ReLU(),
          LayerSpec::Linear(hidden, num_classes)};
}

void ValidateArchitecture(std::span<const LayerSpec> layers) {
  if (layers.empty()) throw DimensionError("architecture: no layers");
  if (layers.front().kind != LayerKind::kLinear)
    throw DimensionError("architecture: must start with a Linear layer");
  if (layers.back().kind != LayerKind::kLinear)
    throw DimensionError("architecture: must end with a Linear layer");
  std::size_t width = layers.front().in;
  bool has_bn = false;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& l = layers[i];
    switch (l.kind) {
      case LayerKind::kLinear:
        if (l.in != width || l.out == 0)
          throw DimensionError("architecture: Linear layer " + std::to_string(i) +
                               " expects width " + std::to_string(width));
        width = l.out;
        break;
      case LayerKind::kBatchNorm:
        if (l.in != width || l.out != width)
          throw DimensionError("architecture: BatchNorm layer " +
                               std::to_string(i) + " width mismatch");
        has_bn = true;
        break;
      case LayerKind::kReLU:
        break;
      default:
        throw DimensionError("architecture: unknown layer kind");
    }
  }
  if (layers.front().in == 0) throw DimensionError("architecture: zero input width");
  if (!has_bn) throw DimensionError("architecture: needs at least one BatchNorm");
}

void Classifier::Layout() {
  ValidateArchitecture(layers_);
  slots_.assign(layers_.size(), Slot{});
  std::size_t p = 0;
  std::size_t s = 0;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const LayerSpec& l = layers_[i];
    if (l.kind == LayerKind::kLinear) {
      slots_[i].param_offset = p;
      p += l.in * l.out;
      slots_[i].param_offset2 = p;
      p += l.out;
    } else if (l.kind == LayerKind::kBatchNorm) {
      slots_[i].param_offset = p;
      p += l.out;
      slots_[i].param_offset2 = p;
      p += l.out;
      slots_[i].stats_offset = s;
      s += 2 * l.out;
    }
  }
  params_.assign(p, 0.0);
  stats_.assign(s, 0.0);
}

Classifier Classifier::Create(std::vector<LayerSpec> layers, numcore::Seed seed,
                              double bn_epsilon) {
  if (!(bn_epsilon > 0.0)) throw PreconditionError("BN epsilon must be > 0");
  Classifier net;
  net.layers_ = std::move(layers);
  net.bn_epsilon_ = bn_epsilon;
  net.Layout();
  numcore::Rng rng(seed.Derive("nnet.init"));
  for (std::size_t i = 0; i < net.layers_.size(); ++i) {
    const LayerSpec& l = net.layers_[i];
    const Slot& slot = net.slots_[i];
    if (l.kind == LayerKind::kLinear) {
      const double stddev = std::sqrt(2.0 / static_cast<double>(l.in));
      for (std::size_t k = 0; k < l.in * l.out; ++k)
        net.params_[slot.param_offset + k] = rng.Normal(0.0, stddev);
    } else if (l.kind == LayerKind::kBatchNorm) {
      for (std::size_t k = 0; k < l.out; ++k) {
        net.params_[slot.param_offset + k] = 1.0;
        net.stats_[slot.stats_offset + l.out + k] = 1.0;
      }
    }
  }
  return net;
}

Classifier Classifier::FromBuffers(std::vector<LayerSpec> layers,
                                   double bn_epsilon, std::vector<double> params,
                                   std::vector<double> stats) {
  Classifier net;
  net.layers_ = std::move(layers);
  net.bn_epsilon_ = bn_epsilon;
  net.Layout();
  if (params.size() != net.params_.size() || stats.size() != net.stats_.size())
    throw DimensionError("classifier buffers do not match architecture");
  net.params_ = std::move(params);
  net.stats_ = std::move(stats);
  return net;
}

std::span<double> Classifier::mutable_params() {
  ++version_;
  return params_;
}

std::span<double> Classifier::mutable_stats() {
  ++version_;
  return stats_;
}

namespace {

void MakePartition(const Classifier& net, bool bn_only,
                             std::vector<std::size_t>& adaptable,
                             std::vector<std::size_t>& frozen,
                             std::vector<char>& mask) {
  mask.assign(net.params().size(), 0);
  const auto& layers = net.layers();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& l = layers[i];
    const auto& slot = net.slots()[i];
    std::size_t count = 0;
    if (l.kind == LayerKind::kBatchNorm) {
      count = 2 * l.out;
    } else if (l.kind == LayerKind::kLinear && !bn_only) {
      count = l.in * l.out + l.out;
    }
    for (std::size_t k = 0; k < count; ++k) mask[slot.param_offset + k] = 1;
  }
  for (std::size_t k = 0; k < mask.size(); ++k)
    (mask[k] ? adaptable : frozen).push_back(k);
}

}  // namespace

ParamPartition ParamPartition::BatchNormAffine(const Classifier& net) {
  ParamPartition p;
  MakePartition(net, true, p.adaptable_, p.frozen_, p.mask_);
  return p;
}

ParamPartition ParamPartition::AllParameters(const Classifier& net) {
  ParamPartition p;
  MakePartition(net, false, p.adaptable_, p.frozen_, p.mask_);
  return p;
}

ForwardResult Forward(const Classifier& net, const Mat& x, BnMode mode) {
  if (x.cols() != net.input_dim()) {
    throw DimensionError("forward: input has " + std::to_string(x.cols()) +
                         " columns, network expects " +
                         std::to_string(net.input_dim()));
  }
  if (mode == BnMode::kBatchStats && x.rows() < 2) {
    throw PreconditionError(
        "forward: batch-stats mode needs a batch of at least 2 rows");
  }
  const auto& layers = net.layers();
  const auto params = net.params();
  const auto stats = net.stats();
  const std::size_t n = x.rows();
  const double eps = net.bn_epsilon();

  ForwardResult result;
  ForwardCache& cache = result.cache;
  cache.version = net.version();
  cache.mode = mode;
  cache.inputs.reserve(layers.size());
  cache.xhat.resize(layers.size());
  cache.inv_std.resize(layers.size());
  cache.batch_mean.resize(layers.size());
  cache.batch_var.resize(layers.size());

  Mat h = x;
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const LayerSpec& l = layers[li];
    const auto& slot = net.slots()[li];
    cache.inputs.push_back(h);
    switch (l.kind) {
      case LayerKind::kLinear: {
        Mat w(l.in, l.out,
              std::vector<double>(params.begin() + slot.param_offset,
                                  params.begin() + slot.param_offset + l.in * l.out));
        Mat y = numcore::MatMul(h, w);
        const double* b = params.data() + slot.param_offset2;
        for (std::size_t r = 0; r < n; ++r) {
          auto row = y.row(r);
          for (std::size_t c = 0; c < l.out; ++c) row[c] += b[c];
        }
        if (li + 1 == layers.size()) result.embedding = h;
        h = std::move(y);
        break;
      }
      case LayerKind::kBatchNorm: {
        const std::size_t d = l.out;
        std::vector<double> mean(d, 0.0), var(d, 0.0);
        if (mode == BnMode::kBatchStats) {
          mean = numcore::ColumnMeans(h);
          for (std::size_t r = 0; r < n; ++r) {
            const auto row = h.row(r);
            for (std::size_t c = 0; c < d; ++c) {
              const double dv = row[c] - mean[c];
              var[c] += dv * dv;
            }
          }
          for (double& v : var) v /= static_cast<double>(n);
        } else {
          for (std::size_t c = 0; c < d; ++c) {
            mean[c] = stats[slot.stats_offset + c];
            var[c] = stats[slot.stats_offset + d + c];
          }
        }
        std::vector<double> inv_std(d);
        for (std::size_t c = 0; c < d; ++c) inv_std[c] = 1.0 / std::sqrt(var[c] + eps);
        Mat xhat(n, d);
        const double* gamma = params.data() + slot.param_offset;
        const double* beta = params.data() + slot.param_offset2;
        for (std::size_t r = 0; r < n; ++r) {
          const auto in = h.row(r);
          auto xr = xhat.row(r);
          auto out = h.row(r);
          for (std::size_t c = 0; c < d; ++c) {
            xr[c] = (in[c] - mean[c]) * inv_std[c];
            out[c] = gamma[c] * xr[c] + beta[c];
          }
        }
        cache.xhat[li] = std::move(xhat);
        cache.inv_std[li] = std::move(inv_std);
        cache.batch_mean[li] = std::move(mean);
        cache.batch_var[li] = std::move(var);
        break;
      }
      case LayerKind::kReLU: {
        for (double& v : h.data()) v = v > 0.0 ? v : 0.0;
        break;
      }
    }
  }
  result.logits = std::move(h);
  return result;
}

Gradients Backward(const Classifier& net, const ForwardCache& cache,
                   const Mat& dlogits, const ParamPartition& partition) {
  if (cache.version != net.version() || cache.inputs.size() != net.layers().size())
    throw PreconditionError("backward: stale forward cache");
  if (partition.num_params() != net.params().size())
    throw DimensionError("backward: partition does not match network");
  const auto& layers = net.layers();
  const std::size_t n = cache.inputs.front().rows();
  if (dlogits.rows() != n || dlogits.cols() != net.num_classes())
    throw DimensionError("backward: upstream gradient shape mismatch");
  const auto params = net.params();

  Gradients g;
  g.values.assign(params.size(), 0.0);
  g.active = partition.adaptable();

  // Earliest layer that owns a trainable parameter; nothing below it needs
  // an input gradient.
  std::size_t first_trainable = layers.size();
  for (std::size_t li = 0; li < layers.size(); ++li) {
    if (layers[li].kind != LayerKind::kReLU &&
        partition.IsAdaptable(net.slots()[li].param_offset)) {
      first_trainable = li;
      break;
    }
  }

  Mat dy = dlogits;
  for (std::size_t li = layers.size(); li-- > 0;) {
    if (li < first_trainable) break;
    const LayerSpec& l = layers[li];
    const auto& slot = net.slots()[li];
    const Mat& in = cache.inputs[li];
    const bool trainable =
        l.kind != LayerKind::kReLU && partition.IsAdaptable(slot.param_offset);
    const bool need_dx = li > first_trainable;
    switch (l.kind) {
      case LayerKind::kLinear: {
        Mat w(l.in, l.out,
              std::vector<double>(params.begin() + slot.param_offset,
                                  params.begin() + slot.param_offset + l.in * l.out));
        if (trainable) {
          Mat dw = numcore::MatMulTransA(in, dy);
          std::copy(dw.data().begin(), dw.data().end(),
                    g.values.begin() + slot.param_offset);
          for (std::size_t r = 0; r < n; ++r) {
            const auto row = dy.row(r);
            for (std::size_t c = 0; c < l.out; ++c)
              g.values[slot.param_offset2 + c] += row[c];
          }
        }
        if (need_dx) dy = numcore::MatMulTransB(dy, w);
        break;
      }
      case LayerKind::kBatchNorm: {
        const std::size_t d = l.out;
        const Mat& xhat = cache.xhat[li];
        const auto& inv_std = cache.inv_std[li];
        const double* gamma = params.data() + slot.param_offset;
        std::vector<double> dgamma(d, 0.0), dbeta(d, 0.0);
        for (std::size_t r = 0; r < n; ++r) {
          const auto dr = dy.row(r);
          const auto xr = xhat.row(r);
          for (std::size_t c = 0; c < d; ++c) {
            dgamma[c] += dr[c] * xr[c];
            dbeta[c] += dr[c];
          }
        }
        if (trainable) {
          for (std::size_t c = 0; c < d; ++c) {
            g.values[slot.param_offset + c] = dgamma[c];
            g.values[slot.param_offset2 + c] = dbeta[c];
          }
        }
        if (!need_dx) break;
        if (cache.mode == BnMode::kBatchStats) {
          // dx = inv_std / n * (n * dxhat - sum(dxhat) - xhat * sum(dxhat * xhat))
          // with dxhat = dy * gamma, so the sums are gamma * dbeta and
          // gamma * dgamma.
          const double inv_n = 1.0 / static_cast<double>(n);
          for (std::size_t r = 0; r < n; ++r) {
            auto dr = dy.row(r);
            const auto xr = xhat.row(r);
            for (std::size_t c = 0; c < d; ++c) {
              dr[c] = gamma[c] * inv_std[c] *
                      (dr[c] - inv_n * dbeta[c] - xr[c] * inv_n * dgamma[c]);
            }
          }
        } else {
          for (std::size_t r = 0; r < n; ++r) {
            auto dr = dy.row(r);
            for (std::size_t c = 0; c < d; ++c) dr[c] *= gamma[c] * inv_std[c];
          }
        }
        break;
      }
      case LayerKind::kReLU: {
        for (std::size_t k = 0; k < dy.size(); ++k)
          if (!(in.data()[k] > 0.0)) dy.data()[k] = 0.0;
        break;
      }
    }
  }
  return g;
}

void SgdStep(Classifier& net, const Gradients& grads, double lr) {
  if (grads.values.size() != net.params().size())
    throw DimensionError("sgd_step: gradient size mismatch");
  auto p = net.mutable_params();
  for (std::size_t i : grads.active) p[i] -= lr * grads.values[i];
}

Snapshot TakeSnapshot(const Classifier& net) {
  return {net.layers(), std::vector<double>(net.params().begin(), net.params().end()),
          std::vector<double>(net.stats().begin(), net.stats().end())};
}

void Restore(Classifier& net, const Snapshot& snapshot) {
  if (snapshot.layers != net.layers() ||
      snapshot.params.size() != net.params().size() ||
      snapshot.stats.size() != net.stats().size()) {
    throw DimensionError("restore: snapshot does not match network");
  }
  auto p = net.mutable_params();
  std::copy(snapshot.params.begin(), snapshot.params.end(), p.begin());
  auto s = net.mutable_stats();
  std::copy(snapshot.stats.begin(), snapshot.stats.end(), s.begin());
}

}  // namespace entropy_lab::nnet
