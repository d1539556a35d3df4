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

#include "entropy_lab/diagnostics/hungarian.h"

#include <algorithm>
#include <limits>

namespace entropy_lab::diagnostics {

Assignment Hungarian(const numcore::Mat& cost) {
  const std::size_t rows = cost.rows();
  const std::size_t cols = cost.cols();
  const std::size_t n = std::max(rows, cols);
  Assignment out;
  out.row_to_col.assign(rows, -1);
  if (n == 0) return out;
  auto c = [&](std::size_t i, std::size_t j) {
    return (i < rows && j < cols) ? cost(i, j) : 0.0;
  };

  // Potentials u (rows) and v (columns), 1-based with a virtual column 0.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);  // match[col] = row
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t r = match[j] - 1;
    if (r < rows && j - 1 < cols) out.row_to_col[r] = static_cast<int>(j - 1);
  }
  // Sum in row order from the original matrix so the total is reproducible.
  for (std::size_t r = 0; r < rows; ++r)
    if (out.row_to_col[r] >= 0) out.total_cost += cost(r, static_cast<std::size_t>(out.row_to_col[r]));
  return out;
}

}  // namespace entropy_lab::diagnostics
