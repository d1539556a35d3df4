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

#include "entropy_lab/estimators/baselines.h"

#include <algorithm>
#include <cmath>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::estimators {

double ClampPercent(double v) { return std::clamp(v, 0.0, 100.0); }

double AverageConfidence(const numcore::Mat& probs) {
  if (probs.rows() == 0) return 0.0;
  const std::vector<double> m = numcore::MaxRows(probs);
  double total = 0.0;
  for (double v : m) total += v;
  return 100.0 * total / static_cast<double>(m.size());
}

double DifferenceOfConfidences(const numcore::Mat& probs_test, const numcore::Mat& probs_val,
                               double acc_val_percent) {
  return ClampPercent(acc_val_percent +
                      (AverageConfidence(probs_test) - AverageConfidence(probs_val)));
}

double AtcFit(std::span<const double> val_conf, const std::vector<bool>& val_correct) {
  const std::size_t n = val_conf.size();
  if (n == 0) throw PreconditionError("atc_fit: empty validation set");
  if (val_correct.size() != n) throw DimensionError("atc_fit: one correctness flag per score");
  std::size_t correct = 0;
  for (bool c : val_correct) correct += c ? 1 : 0;

  std::vector<double> sorted(val_conf.begin(), val_conf.end());
  std::sort(sorted.begin(), sorted.end());
  // Candidate thresholds in increasing order; the count strictly above each is
  // known from the position in the sorted scores.
  double best_t = sorted.front() - 1.0;
  std::size_t best_gap = n - correct;  // everything is above the lowest threshold
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && sorted[j] == sorted[i]) ++j;
    // Threshold just above sorted[i]: scores at indices >= j are above it.
    const double t = j < n ? sorted[i] + (sorted[j] - sorted[i]) / 2.0 : sorted.back() + 1.0;
    const std::size_t above = n - j;
    const std::size_t gap = above > correct ? above - correct : correct - above;
    if (gap < best_gap) {
      best_gap = gap;
      best_t = t;
    }
    i = j;
  }
  return best_t;
}

double AtcPredict(std::span<const double> test_conf, double threshold) {
  if (test_conf.empty()) return 0.0;
  std::size_t above = 0;
  for (double c : test_conf) above += c > threshold ? 1 : 0;
  return 100.0 * static_cast<double>(above) / static_cast<double>(test_conf.size());
}

}  // namespace entropy_lab::estimators
