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

#include "entropy_lab/diagnostics/kmeans.h"

#include <limits>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::diagnostics {

using numcore::Mat;

std::vector<int> AssignNearest(const Mat& points, const Mat& centroids) {
  std::vector<int> out(points.rows());
  for (std::size_t i = 0; i < points.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (std::size_t c = 0; c < centroids.rows(); ++c) {
      const double d = numcore::SquaredDistance(points.row(i), centroids.row(c));
      if (d < best) {
        best = d;
        arg = static_cast<int>(c);
      }
    }
    out[i] = arg;
  }
  return out;
}

double Inertia(const Mat& points, const Mat& centroids, const std::vector<int>& assignment) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.rows(); ++i)
    total += numcore::SquaredDistance(points.row(i), centroids.row(assignment[i]));
  return total;
}

namespace {

Mat PlusPlusSeeds(const Mat& points, std::size_t k, numcore::Rng& rng) {
  const std::size_t n = points.rows();
  Mat centroids(k, points.cols());
  auto copy_row = [&](std::size_t c, std::size_t i) {
    auto src = points.row(i);
    auto dst = centroids.row(c);
    std::copy(src.begin(), src.end(), dst.begin());
  };
  copy_row(0, rng.Index(n));
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i)
    d2[i] = numcore::SquaredDistance(points.row(i), centroids.row(0));
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (double v : d2) total += v;
    std::size_t pick = 0;
    if (total > 0.0) {
      double u = rng.Uniform() * total;
      pick = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (u < d2[i]) {
          pick = i;
          break;
        }
        u -= d2[i];
      }
      // Guard against rounding landing on an already-chosen point.
      if (d2[pick] == 0.0) {
        for (std::size_t i = 0; i < n; ++i)
          if (d2[i] > 0.0) pick = i;
      }
    } else {
      pick = rng.Index(n);
    }
    copy_row(c, pick);
    for (std::size_t i = 0; i < n; ++i)
      d2[i] = std::min(d2[i], numcore::SquaredDistance(points.row(i), centroids.row(c)));
  }
  return centroids;
}

}  // namespace

Clustering KMeans(const Mat& points, std::size_t k, numcore::Seed seed,
                  const KMeansOptions& options) {
  const std::size_t n = points.rows();
  const std::size_t dim = points.cols();
  if (k == 0 || k > n)
    throw PreconditionError("kmeans: k must be in 1..n (k = " + std::to_string(k) +
                            ", n = " + std::to_string(n) + ")");
  numcore::Rng rng(seed);
  Clustering out;
  out.k = k;
  out.centroids = PlusPlusSeeds(points, k, rng);
  out.assignment = AssignNearest(points, out.centroids);
  out.inertia = Inertia(points, out.centroids, out.assignment);
  out.inertia_history.push_back(out.inertia);

  for (std::size_t it = 0; it < options.max_iter; ++it) {
    Mat next(k, dim);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(out.assignment[i]);
      ++counts[c];
      auto src = points.row(i);
      auto dst = next.row(c);
      for (std::size_t j = 0; j < dim; ++j) dst[j] += src[j];
    }
    for (std::size_t c = 0; c < k; ++c) {
      auto dst = next.row(c);
      if (counts[c] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) dst[j] /= static_cast<double>(counts[c]);
    }
    // Empty clusters take the point farthest from its current centroid; that
    // point leaves a cluster with at least two members, so no new empties.
    std::vector<int> assignment = out.assignment;
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      double far = -1.0;
      std::size_t arg = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<std::size_t>(assignment[i]);
        if (counts[a] < 2) continue;
        const double d = numcore::SquaredDistance(points.row(i), next.row(a));
        if (d > far) {
          far = d;
          arg = i;
        }
      }
      --counts[static_cast<std::size_t>(assignment[arg])];
      counts[c] = 1;
      assignment[arg] = static_cast<int>(c);
      auto src = points.row(arg);
      auto dst = next.row(c);
      std::copy(src.begin(), src.end(), dst.begin());
    }
    std::vector<int> reassigned = AssignNearest(points, next);
    const double inertia = Inertia(points, next, reassigned);
    ++out.iterations;
    const double improvement = out.inertia - inertia;
    if (improvement < 0.0) {
      // Re-seeding can in principle cost more than it saves; keep the
      // previous solution so inertia never increases.
      break;
    }
    out.centroids = std::move(next);
    out.assignment = std::move(reassigned);
    out.inertia = inertia;
    out.inertia_history.push_back(inertia);
    if (improvement < options.tol) break;
  }
  return out;
}

}  // namespace entropy_lab::diagnostics
