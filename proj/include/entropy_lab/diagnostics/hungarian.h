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

#ifndef ENTROPY_LAB_DIAGNOSTICS_HUNGARIAN_H_
#define ENTROPY_LAB_DIAGNOSTICS_HUNGARIAN_H_

#include <vector>

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::diagnostics {

struct Assignment {
  // row_to_col[r] is the column matched to row r, or -1 for a row left
  // unmatched in a rectangular problem with more rows than columns.
  std::vector<int> row_to_col;
  double total_cost = 0.0;  // sum over matched pairs, in original costs
};

// Minimum-cost assignment (shortest augmenting path form of the Hungarian
// method, O(n^3)). Rectangular inputs are padded with zero-cost dummy rows or
// columns, so every row is matched when rows <= cols and every column when
// cols <= rows.
Assignment Hungarian(const numcore::Mat& cost);

}  // namespace entropy_lab::diagnostics

#endif  // ENTROPY_LAB_DIAGNOSTICS_HUNGARIAN_H_
