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

#include "entropy_lab/diagnostics/silhouette.h"

#include <algorithm>
#include <limits>
#include <map>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::diagnostics {

double Silhouette(const numcore::Mat& points, const std::vector<int>& assignment) {
  const std::size_t n = points.rows();
  if (assignment.size() != n) throw DimensionError("silhouette: one cluster id per point required");
  // Dense relabelling of the cluster ids.
  std::map<int, std::size_t> index;
  for (int a : assignment) {
    if (a < 0) throw PreconditionError("silhouette: negative cluster id");
    index.emplace(a, 0);
  }
  if (index.size() < 2) throw UndefinedError("silhouette: needs at least two clusters");
  std::size_t next = 0;
  for (auto& [id, idx] : index) idx = next++;
  const std::size_t k = index.size();
  std::vector<std::size_t> cluster(n);
  std::vector<std::size_t> sizes(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cluster[i] = index[assignment[i]];
    ++sizes[cluster[i]];
  }

  double total = 0.0;
  std::vector<double> sums(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (sizes[cluster[i]] == 1) continue;
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      sums[cluster[j]] += numcore::Distance(points.row(i), points.row(j));
    }
    const double a = sums[cluster[i]] / static_cast<double>(sizes[cluster[i]] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      if (c == cluster[i]) continue;
      b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
    }
    const double m = std::max(a, b);
    if (m > 0.0) total += (b - a) / m;
  }
  return total / static_cast<double>(n);
}

}  // namespace entropy_lab::diagnostics
