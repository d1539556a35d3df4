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

#ifndef ENTROPY_LAB_DIAGNOSTICS_KMEANS_H_
#define ENTROPY_LAB_DIAGNOSTICS_KMEANS_H_

#include <cstddef>
#include <vector>

#include "entropy_lab/numcore/mat.h"
#include "entropy_lab/numcore/random.h"

namespace entropy_lab::diagnostics {

struct Clustering {
  std::size_t k = 0;
  numcore::Mat centroids;          // k x dim
  std::vector<int> assignment;     // one cluster index per point
  double inertia = 0.0;            // sum of squared distances to centroids
  // Inertia after seeding and after every Lloyd iteration.
  std::vector<double> inertia_history;
  std::size_t iterations = 0;
};

struct KMeansOptions {
  std::size_t max_iter = 300;
  double tol = 1e-6;
};

// k-means++ seeding followed by Lloyd iterations until the inertia improves
// by less than `tol` or `max_iter` is reached. A cluster that empties is
// re-seeded at the point farthest from its centroid. Throws
// PreconditionError if k == 0 or k > points.rows().
Clustering KMeans(const numcore::Mat& points, std::size_t k, numcore::Seed seed,
                  const KMeansOptions& options = {});

// Index of the nearest centroid for every point (first on ties).
std::vector<int> AssignNearest(const numcore::Mat& points, const numcore::Mat& centroids);

double Inertia(const numcore::Mat& points, const numcore::Mat& centroids,
               const std::vector<int>& assignment);

}  // namespace entropy_lab::diagnostics

#endif  // ENTROPY_LAB_DIAGNOSTICS_KMEANS_H_
