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

#include "entropy_lab/tta/filters.h"

#include <cmath>

#include <spdlog/spdlog.h>

#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/tta/config.h"

namespace entropy_lab::tta {

std::string MethodName(Method m) { return m == Method::kTent ? "tent" : "rdumb"; }

Method ParseMethod(const std::string& name) {
  if (name == "tent") return Method::kTent;
  if (name == "rdumb") return Method::kRdumb;
  throw ConfigError("unknown adaptation method '" + name + "'");
}

void TtaConfig::Validate() const {
  if (!(lr > 0.0)) throw ConfigError("tta: lr must be > 0");
  if (reset_period == 0) throw ConfigError("tta: reset_period must be > 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("tta: alpha must be in (0, 1]");
  if (!(eps_div >= 0.0 && eps_div <= 1.0))
    throw ConfigError("tta: eps_div must be in [0, 1]");
  if (batch_size < 2) throw ConfigError("tta: batch_size must be >= 2");
  if (eval_interval == 0) throw ConfigError("tta: eval_interval must be > 0");
}

std::vector<double> EntropyWeights(std::span<const double> entropies, double e0) {
  std::vector<double> w(entropies.size(), 0.0);
  for (std::size_t i = 0; i < entropies.size(); ++i) {
    if (entropies[i] < e0) w[i] = std::exp(e0 - entropies[i]);
  }
  return w;
}

std::vector<double> DiversityMask(const numcore::Mat& batch_logits,
                                  const std::optional<std::vector<double>>& ema,
                                  double eps_div) {
  std::vector<double> mask(batch_logits.rows(), 1.0);
  if (!ema) return mask;
  if (ema->size() != batch_logits.cols())
    throw DimensionError("diversity_mask: EMA width mismatch");
  const double m_norm = numcore::Norm(*ema);
  if (m_norm == 0.0) return mask;
  std::size_t zero_rows = 0;
  for (std::size_t i = 0; i < batch_logits.rows(); ++i) {
    const auto row = batch_logits.row(i);
    const double r_norm = numcore::Norm(row);
    if (r_norm == 0.0) {
      mask[i] = 0.0;
      ++zero_rows;
      continue;
    }
    const double cos = numcore::Dot(row, *ema) / (r_norm * m_norm);
    mask[i] = cos < eps_div ? 1.0 : 0.0;
  }
  if (zero_rows > 0)
    spdlog::warn("diversity_mask: {} zero-norm logit rows masked out", zero_rows);
  return mask;
}

std::vector<double> EmaUpdate(const std::optional<std::vector<double>>& ema,
                              std::span<const double> batch_mean, double alpha) {
  if (!ema) return {batch_mean.begin(), batch_mean.end()};
  if (ema->size() != batch_mean.size()) throw DimensionError("ema_update: width mismatch");
  std::vector<double> out(batch_mean.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = alpha * batch_mean[i] + (1.0 - alpha) * (*ema)[i];
  return out;
}

}  // namespace entropy_lab::tta
