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

#include "entropy_lab/diagnostics/shift.h"

#include <string>

#include "entropy_lab/diagnostics/hungarian.h"
#include "entropy_lab/diagnostics/kmeans.h"
#include "entropy_lab/diagnostics/silhouette.h"
#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::diagnostics {

using numcore::Mat;

Mat ClassMeans(const Mat& embeddings, const std::vector<int>& labels, int num_classes) {
  if (labels.size() != embeddings.rows())
    throw DimensionError("class_means: one label per embedding row required");
  const auto c_count = static_cast<std::size_t>(num_classes);
  Mat means(c_count, embeddings.cols());
  std::vector<std::size_t> counts(c_count, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) continue;
    const auto c = static_cast<std::size_t>(labels[i]);
    if (c >= c_count) throw PreconditionError("class_means: label out of range");
    ++counts[c];
    auto src = embeddings.row(i);
    auto dst = means.row(c);
    for (std::size_t j = 0; j < src.size(); ++j) dst[j] += src[j];
  }
  for (std::size_t c = 0; c < c_count; ++c) {
    if (counts[c] == 0)
      throw PreconditionError("class_means: class " + std::to_string(c) + " has no sample");
    for (double& v : means.row(c)) v /= static_cast<double>(counts[c]);
  }
  return means;
}

ShiftResult ShiftDistance(const Mat& class_means, const Mat& centroids) {
  if (class_means.rows() != centroids.rows() || class_means.cols() != centroids.cols())
    throw DimensionError("shift_distance: class means are " +
                         std::to_string(class_means.rows()) + "x" +
                         std::to_string(class_means.cols()) + ", centroids are " +
                         std::to_string(centroids.rows()) + "x" +
                         std::to_string(centroids.cols()));
  const std::size_t k = class_means.rows();
  ShiftResult out;
  if (k == 0) return out;
  Mat cost(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      cost(a, b) = numcore::Distance(class_means.row(a), centroids.row(b));
  Assignment match = Hungarian(cost);
  out.distance = match.total_cost / static_cast<double>(k);
  out.class_to_centroid = std::move(match.row_to_col);
  return out;
}

ClusterDiagnostics Diagnose(const Mat& embeddings, const Mat& class_means, numcore::Seed seed) {
  const Clustering clustering = KMeans(embeddings, class_means.rows(), seed);
  ClusterDiagnostics out;
  out.silhouette = Silhouette(embeddings, clustering.assignment);
  ShiftResult shift = ShiftDistance(class_means, clustering.centroids);
  out.shift_distance = shift.distance;
  out.class_to_centroid = std::move(shift.class_to_centroid);
  return out;
}

}  // namespace entropy_lab::diagnostics
