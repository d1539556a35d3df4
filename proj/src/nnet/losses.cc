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

#include "entropy_lab/nnet/losses.h"

#include <cmath>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::nnet {

using numcore::Mat;

std::vector<double> RowEntropies(const Mat& logits) {
  const Mat logp = numcore::LogSoftmaxRows(logits);
  std::vector<double> h(logits.rows(), 0.0);
  for (std::size_t i = 0; i < logp.rows(); ++i) {
    double s = 0.0;
    for (double lp : logp.row(i)) s -= std::exp(lp) * lp;
    h[i] = s;
  }
  return h;
}

LossAndGrad EntropyLoss(const Mat& logits, std::span<const double> sample_weights) {
  const std::size_t n = logits.rows();
  if (sample_weights.size() != n)
    throw DimensionError("entropy_loss: one weight per row required");
  LossAndGrad out{0.0, Mat(n, logits.cols())};
  if (n == 0) return out;
  const Mat logp = numcore::LogSoftmaxRows(logits);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = sample_weights[i];
    if (w < 0.0) throw PreconditionError("entropy_loss: negative sample weight");
    const auto lp = logp.row(i);
    double h = 0.0;
    for (double v : lp) h -= std::exp(v) * v;
    out.loss += w * h;
    auto g = out.dlogits.row(i);
    for (std::size_t j = 0; j < lp.size(); ++j) {
      g[j] = -w * inv_n * std::exp(lp[j]) * (lp[j] + h);
    }
  }
  out.loss *= inv_n;
  return out;
}

LossAndGrad CrossEntropyLoss(const Mat& logits, std::span<const int> labels) {
  const std::size_t n = logits.rows();
  if (labels.size() != n) throw DimensionError("cross_entropy: label count mismatch");
  LossAndGrad out{0.0, numcore::SoftmaxRows(logits)};
  if (n == 0) return out;
  const Mat logp = numcore::LogSoftmaxRows(logits);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int y = labels[i];
    if (y < 0 || static_cast<std::size_t>(y) >= logits.cols())
      throw PreconditionError("cross_entropy: label out of range");
    out.loss -= logp(i, static_cast<std::size_t>(y));
    auto g = out.dlogits.row(i);
    g[static_cast<std::size_t>(y)] -= 1.0;
    for (double& v : g) v *= inv_n;
  }
  out.loss *= inv_n;
  return out;
}

}  // namespace entropy_lab::nnet
