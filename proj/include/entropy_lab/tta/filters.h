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

#ifndef ENTROPY_LAB_TTA_FILTERS_H_
#define ENTROPY_LAB_TTA_FILTERS_H_

#include <optional>
#include <span>
#include <vector>

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::tta {

// S_ent: exp(E0 - E_i) when E_i < E0, else 0.
std::vector<double> EntropyWeights(std::span<const double> entropies, double e0);

// S_div: 1 when cos(logits_i, m) < eps_div, else 0. Without a reference
// vector (first step) every row passes. Zero-norm rows are masked out with a
// warning.
std::vector<double> DiversityMask(const numcore::Mat& batch_logits,
                                  const std::optional<std::vector<double>>& ema,
                                  double eps_div);

// m' = alpha * y + (1 - alpha) * m, or y when m is absent.
std::vector<double> EmaUpdate(const std::optional<std::vector<double>>& ema,
                              std::span<const double> batch_mean, double alpha);

}  // namespace entropy_lab::tta

#endif  // ENTROPY_LAB_TTA_FILTERS_H_
