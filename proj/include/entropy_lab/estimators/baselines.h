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

#ifndef ENTROPY_LAB_ESTIMATORS_BASELINES_H_
#define ENTROPY_LAB_ESTIMATORS_BASELINES_H_

#include <span>
#include <vector>

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::estimators {

// Clamps to [0, 100].
double ClampPercent(double v);

// Average confidence: 100 * mean row maximum. 0 for an empty matrix.
double AverageConfidence(const numcore::Mat& probs);

// Difference of confidences: acc_val + (AC(test) - AC(val)), clamped.
double DifferenceOfConfidences(const numcore::Mat& probs_test, const numcore::Mat& probs_val,
                               double acc_val_percent);

// Threshold t, a midpoint between adjacent distinct sorted scores (or one
// below the minimum / above the maximum), such that the fraction of scores
// strictly above t is as close as possible to the fraction correct. Ties in
// closeness go to the lower threshold. Throws PreconditionError for empty
// input or mismatched lengths.
double AtcFit(std::span<const double> val_conf, const std::vector<bool>& val_correct);

// 100 * fraction of scores strictly above t (0 for empty input).
double AtcPredict(std::span<const double> test_conf, double threshold);

}  // namespace entropy_lab::estimators

#endif  // ENTROPY_LAB_ESTIMATORS_BASELINES_H_
