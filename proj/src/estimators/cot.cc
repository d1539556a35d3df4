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

#include "entropy_lab/estimators/cot.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entropy_lab/diagnostics/hungarian.h"
#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::estimators {

std::vector<std::size_t> AllocateTargets(std::span<const double> marginal, std::size_t n) {
  const std::size_t c = marginal.size();
  std::vector<std::size_t> counts(c, 0);
  std::vector<double> remainder(c, 0.0);
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < c; ++k) {
    const double exact = marginal[k] * static_cast<double>(n);
    counts[k] = static_cast<std::size_t>(std::floor(exact));
    remainder[k] = exact - static_cast<double>(counts[k]);
    assigned += counts[k];
  }
  std::vector<std::size_t> order(c);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; assigned < n; i = (i + 1) % c) {
    ++counts[order[i]];
    ++assigned;
  }
  return counts;
}

double OneHotCost(std::span<const double> probs, std::size_t label) {
  double l1 = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k)
    l1 += std::abs(probs[k] - (k == label ? 1.0 : 0.0));
  return 0.5 * l1;
}

CotResult Cot(const numcore::Mat& probs_test, std::span<const double> source_marginal) {
  const std::size_t n = probs_test.rows();
  const std::size_t c = probs_test.cols();
  if (n == 0) throw PreconditionError("cot: no test rows");
  if (source_marginal.size() != c)
    throw DimensionError("cot: marginal has " + std::to_string(source_marginal.size()) +
                         " entries for " + std::to_string(c) + " classes");
  double total = 0.0;
  for (double m : source_marginal) {
    if (m < 0.0) throw PreconditionError("cot: negative marginal entry");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-9) throw PreconditionError("cot: marginal must sum to 1");

  const std::vector<std::size_t> counts = AllocateTargets(source_marginal, n);
  std::vector<std::size_t> target_class;
  target_class.reserve(n);
  for (std::size_t k = 0; k < c; ++k) target_class.insert(target_class.end(), counts[k], k);

  numcore::Mat cost(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = probs_test.row(i);
    // Cost depends only on the target class; compute once per class.
    std::vector<double> per_class(c);
    for (std::size_t k = 0; k < c; ++k) per_class[k] = OneHotCost(row, k);
    for (std::size_t j = 0; j < n; ++j) cost(i, j) = per_class[target_class[j]];
  }
  const diagnostics::Assignment match = diagnostics::Hungarian(cost);

  CotResult out;
  out.mean_cost = match.total_cost / static_cast<double>(n);
  out.estimate = std::clamp(100.0 * (1.0 - out.mean_cost), 0.0, 100.0);
  out.row_to_target.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.row_to_target[i] = static_cast<int>(target_class[static_cast<std::size_t>(match.row_to_col[i])]);
  return out;
}

}  // namespace entropy_lab::estimators
