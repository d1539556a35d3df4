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

#ifndef ENTROPY_LAB_DIAGNOSTICS_SILHOUETTE_H_
#define ENTROPY_LAB_DIAGNOSTICS_SILHOUETTE_H_

#include <vector>

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::diagnostics {

// Mean silhouette (b - a) / max(a, b) with Euclidean distances. Points in
// singleton clusters score 0. Cluster ids are arbitrary non-negative ints.
// Throws UndefinedError when fewer than two clusters are present and
// DimensionError when sizes disagree.
double Silhouette(const numcore::Mat& points, const std::vector<int>& assignment);

}  // namespace entropy_lab::diagnostics

#endif  // ENTROPY_LAB_DIAGNOSTICS_SILHOUETTE_H_
