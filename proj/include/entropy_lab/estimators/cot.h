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

#ifndef ENTROPY_LAB_ESTIMATORS_COT_H_
#define ENTROPY_LAB_ESTIMATORS_COT_H_

#include <span>
#include <vector>

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::estimators {

// Splits n targets over classes proportionally to `marginal` by
// largest-remainder rounding (remainder ties go to the lower class index).
std::vector<std::size_t> AllocateTargets(std::span<const double> marginal, std::size_t n);

// Ground cost between a probability row and the one-hot vector of `label`:
// half the L1 distance, which equals 1 - p[label].
double OneHotCost(std::span<const double> probs, std::size_t label);

struct CotResult {
  double estimate = 0.0;             // percent
  double mean_cost = 0.0;
  std::vector<int> row_to_target;    // target class matched to every test row
};

// Exact balanced assignment between the test rows and the allocated one-hot
// targets; estimate = 100 * (1 - mean matched cost). Throws PreconditionError
// for n = 0 or a marginal that does not sum to 1 (within 1e-9), and
// DimensionError when the marginal length differs from the class count.
CotResult Cot(const numcore::Mat& probs_test, std::span<const double> source_marginal);

}  // namespace entropy_lab::estimators

#endif  // ENTROPY_LAB_ESTIMATORS_COT_H_
