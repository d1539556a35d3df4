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

#ifndef ENTROPY_LAB_EMGMM_TOY_H_
#define ENTROPY_LAB_EMGMM_TOY_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "entropy_lab/numcore/mat.h"
#include "entropy_lab/numcore/random.h"

namespace entropy_lab::emgmm {

// Gaussian mixture with identity covariance and equal weights. Points are
// trainable: after every EM iteration each point takes a gradient step on its
// own log-likelihood.

// r_ik proportional to exp(-|x_i - mu_k|^2 / 2), rows normalized.
numcore::Mat Responsibilities(const numcore::Mat& points, const numcore::Mat& centroids);

// One-hot rows on the nearest centroid (first on ties).
numcore::Mat HardResponsibilities(const numcore::Mat& points, const numcore::Mat& centroids);

// mu_k = sum_i r_ik x_i / sum_i r_ik. A cluster with zero total
// responsibility is re-seeded at the point farthest from its nearest
// centroid (a warning is logged); `reseeded` counts such events if non-null.
numcore::Mat MStepCentroids(const numcore::Mat& points, const numcore::Mat& resp,
                            const numcore::Mat& previous, std::size_t* reseeded = nullptr);

// x_i + eta * sum_k r_ik (mu_k - x_i). Throws PreconditionError for eta < 0.
numcore::Mat PointUpdate(const numcore::Mat& points, const numcore::Mat& resp,
                         const numcore::Mat& centroids, double eta);

// sum_i log( (1/k) sum_k N(x_i; mu_k, I) ).
double LogLikelihood(const numcore::Mat& points, const numcore::Mat& centroids);

// Adjusted Rand index between two labelings of equal length; 1 when both are
// the trivial single-cluster labeling.
double AdjustedRandIndex(const std::vector<int>& a, const std::vector<int>& b);

enum class InitMode {
  kSmart,    // one random sample of every true class as that cluster's center
  kShifted,  // smart centers translated by `offset`
  kEmOnly,   // shifted centers with fixed samples (eta forced to 0)
};
std::string InitName(InitMode mode);      // "smart", "shifted", "em-only"
InitMode ParseInit(const std::string& name);  // ConfigError on unknown names

struct GmmToyConfig {
  std::size_t k = 4;
  numcore::Mat points;            // n x d
  std::vector<int> labels;        // true cluster per point, in 0..k-1
  InitMode init = InitMode::kSmart;
  std::vector<double> offset;     // d entries, used by kShifted / kEmOnly
  double eta = 0.1;
  std::size_t iterations = 50;
  bool hard = false;              // nearest-centroid responsibilities
  numcore::Seed seed;

  // Throws PreconditionError on inconsistent fields.
  void Validate() const;
};

struct ToyData {
  numcore::Mat points;
  std::vector<int> labels;
  numcore::Mat means;
  double separation = 0.0;  // smallest distance between two means
};

// k unit-variance clusters in d dimensions with means evenly spaced on a
// circle of the given radius in the first two coordinates.
ToyData MakeToyData(std::size_t k, std::size_t dim, std::size_t per_cluster, double radius,
                    numcore::Seed seed);

struct ToyTrajectory {
  std::vector<numcore::Mat> centroids;  // iterations + 1 (initial first)
  std::vector<numcore::Mat> points;     // iterations + 1
  std::vector<numcore::Mat> resp;       // iterations (E-step of each iteration)
  std::vector<double> ari;              // iterations + 1, nearest-centroid labels
  std::vector<double> log_likelihood;   // iterations + 1, of current points
  std::size_t reseeded = 0;

  double final_ari() const { return ari.back(); }
};

// Initial centroids for a config (deterministic per seed).
numcore::Mat InitialCentroids(const GmmToyConfig& cfg);

// T iterations of E-step, centroid M-step, point update.
ToyTrajectory RunToy(const GmmToyConfig& cfg);

// `iter,ari,log_likelihood` per iteration.
void WriteTrajectoryCsv(const ToyTrajectory& t, std::ostream& out);
// `iter,cluster,x0..x{d-1}` for every centroid at every iteration.
void WriteCentroidsCsv(const ToyTrajectory& t, std::ostream& out);

}  // namespace entropy_lab::emgmm

#endif  // ENTROPY_LAB_EMGMM_TOY_H_
