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

#ifndef ENTROPY_LAB_DIAGNOSTICS_SHIFT_H_
#define ENTROPY_LAB_DIAGNOSTICS_SHIFT_H_

#include <vector>

#include "entropy_lab/numcore/mat.h"
#include "entropy_lab/numcore/random.h"

namespace entropy_lab::diagnostics {

// Per-class mean rows (C x dim). Rows with label < 0 are ignored. Throws
// PreconditionError if some class in 0..num_classes-1 has no sample.
numcore::Mat ClassMeans(const numcore::Mat& embeddings, const std::vector<int>& labels,
                        int num_classes);

struct ShiftResult {
  double distance = 0.0;
  std::vector<int> class_to_centroid;
};

// Mean Euclidean distance between class means and centroids under the
// minimum-total-distance bijection. Throws DimensionError unless both have
// the same number of rows and columns.
ShiftResult ShiftDistance(const numcore::Mat& class_means, const numcore::Mat& centroids);

struct ClusterDiagnostics {
  double silhouette = 0.0;
  double shift_distance = 0.0;
  std::vector<int> class_to_centroid;
};

// k-means with k = class_means.rows() on `embeddings`, then the Silhouette of
// that clustering and the Shift distance of its centroids.
ClusterDiagnostics Diagnose(const numcore::Mat& embeddings, const numcore::Mat& class_means,
                            numcore::Seed seed);

}  // namespace entropy_lab::diagnostics

#endif  // ENTROPY_LAB_DIAGNOSTICS_SHIFT_H_
