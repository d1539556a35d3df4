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

#include "entropy_lab/emgmm/toy.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::emgmm {

using numcore::Mat;

Mat Responsibilities(const Mat& points, const Mat& centroids) {
  if (points.cols() != centroids.cols())
    throw DimensionError("responsibilities: point and centroid widths differ");
  const std::size_t k = centroids.rows();
  Mat r(points.rows(), k);
  std::vector<double> logit(k);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      logit[c] = -0.5 * numcore::SquaredDistance(points.row(i), centroids.row(c));
      top = std::max(top, logit[c]);
    }
    double z = 0.0;
    for (std::size_t c = 0; c < k; ++c) z += std::exp(logit[c] - top);
    for (std::size_t c = 0; c < k; ++c) r(i, c) = std::exp(logit[c] - top) / z;
  }
  return r;
}

Mat HardResponsibilities(const Mat& points, const Mat& centroids) {
  Mat r(points.rows(), centroids.rows());
  for (std::size_t i = 0; i < points.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t c = 0; c < centroids.rows(); ++c) {
      const double d = numcore::SquaredDistance(points.row(i), centroids.row(c));
      if (d < best) {
        best = d;
        arg = c;
      }
    }
    r(i, arg) = 1.0;
  }
  return r;
}

Mat MStepCentroids(const Mat& points, const Mat& resp, const Mat& previous,
                   std::size_t* reseeded) {
  const std::size_t n = points.rows();
  const std::size_t k = resp.cols();
  const std::size_t d = points.cols();
  if (resp.rows() != n) throw DimensionError("mstep: one responsibility row per point");
  Mat mu(k, d);
  std::vector<double> mass(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      const double w = resp(i, c);
      mass[c] += w;
      auto dst = mu.row(c);
      auto src = points.row(i);
      for (std::size_t j = 0; j < d; ++j) dst[j] += w * src[j];
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (mass[c] > 0.0) {
      for (double& v : mu.row(c)) v /= mass[c];
      continue;
    }
    // Farthest point from its nearest previous centroid.
    double far = -1.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t q = 0; q < previous.rows(); ++q)
        nearest = std::min(nearest, numcore::SquaredDistance(points.row(i), previous.row(q)));
      if (nearest > far) {
        far = nearest;
        arg = i;
      }
    }
    spdlog::warn("em-gmm: cluster {} lost all responsibility, re-seeded at point {}", c, arg);
    auto src = points.row(arg);
    std::copy(src.begin(), src.end(), mu.row(c).begin());
    if (reseeded != nullptr) ++*reseeded;
  }
  return mu;
}

Mat PointUpdate(const Mat& points, const Mat& resp, const Mat& centroids, double eta) {
  if (eta < 0.0) throw PreconditionError("point_update: eta must be >= 0");
  Mat out = points;
  if (eta == 0.0) return out;
  const std::size_t d = points.cols();
  for (std::size_t i = 0; i < points.rows(); ++i) {
    auto x = points.row(i);
    auto dst = out.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      double step = 0.0;
      for (std::size_t c = 0; c < centroids.rows(); ++c) step += resp(i, c) * (centroids(c, j) - x[j]);
      dst[j] = x[j] + eta * step;
    }
  }
  return out;
}

double LogLikelihood(const Mat& points, const Mat& centroids) {
  const std::size_t k = centroids.rows();
  const double log_norm = -0.5 * static_cast<double>(points.cols()) * std::log(2.0 * std::numbers::pi) -
                          std::log(static_cast<double>(k));
  double total = 0.0;
  std::vector<double> logit(k);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      logit[c] = -0.5 * numcore::SquaredDistance(points.row(i), centroids.row(c));
      top = std::max(top, logit[c]);
    }
    double z = 0.0;
    for (double l : logit) z += std::exp(l - top);
    total += top + std::log(z) + log_norm;
  }
  return total;
}

double AdjustedRandIndex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw DimensionError("ari: labelings differ in length");
  const std::size_t n = a.size();
  if (n < 2) return 1.0;
  auto dense = [](const std::vector<int>& v) {
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v[i]) -
                                        sorted.begin());
    return std::make_pair(out, sorted.size());
  };
  const auto [da, ka] = dense(a);
  const auto [db, kb] = dense(b);
  std::vector<double> table(ka * kb, 0.0), ra(ka, 0.0), rb(kb, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    table[da[i] * kb + db[i]] += 1.0;
    ra[da[i]] += 1.0;
    rb[db[i]] += 1.0;
  }
  auto pairs = [](double m) { return m * (m - 1.0) / 2.0; };
  double index = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (double v : table) index += pairs(v);
  for (double v : ra) sum_a += pairs(v);
  for (double v : rb) sum_b += pairs(v);
  const double expected = sum_a * sum_b / pairs(static_cast<double>(n));
  const double max_index = 0.5 * (sum_a + sum_b);
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

std::string InitName(InitMode mode) {
  switch (mode) {
    case InitMode::kSmart: return "smart";
    case InitMode::kShifted: return "shifted";
    case InitMode::kEmOnly: return "em-only";
  }
  return "?";
}

InitMode ParseInit(const std::string& name) {
  for (InitMode m : {InitMode::kSmart, InitMode::kShifted, InitMode::kEmOnly})
    if (InitName(m) == name) return m;
  throw ConfigError("unknown em-gmm init '" + name + "'");
}

void GmmToyConfig::Validate() const {
  if (k < 2) throw PreconditionError("em-gmm: k must be >= 2");
  if (eta < 0.0) throw PreconditionError("em-gmm: eta must be >= 0");
  if (labels.size() != points.rows()) throw PreconditionError("em-gmm: one label per point");
  for (int l : labels)
    if (l < 0 || static_cast<std::size_t>(l) >= k)
      throw PreconditionError("em-gmm: labels must lie in 0..k-1");
  if (init != InitMode::kSmart && offset.size() != points.cols())
    throw PreconditionError("em-gmm: shifted init needs one offset entry per dimension");
}

ToyData MakeToyData(std::size_t k, std::size_t dim, std::size_t per_cluster, double radius,
                    numcore::Seed seed) {
  if (k < 2 || dim < 2) throw PreconditionError("toy data: k >= 2 and dim >= 2 required");
  ToyData data;
  data.means = Mat(k, dim);
  for (std::size_t c = 0; c < k; ++c) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(c) / static_cast<double>(k);
    data.means(c, 0) = radius * std::cos(angle);
    data.means(c, 1) = radius * std::sin(angle);
  }
  data.separation = 2.0 * radius * std::sin(std::numbers::pi / static_cast<double>(k));
  numcore::Rng rng(seed.Derive("emgmm.data"));
  data.points = Mat(k * per_cluster, dim);
  data.labels.resize(k * per_cluster);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t s = 0; s < per_cluster; ++s) {
      const std::size_t i = c * per_cluster + s;
      data.labels[i] = static_cast<int>(c);
      for (std::size_t j = 0; j < dim; ++j) data.points(i, j) = data.means(c, j) + rng.Normal(0.0, 1.0);
    }
  }
  return data;
}

Mat InitialCentroids(const GmmToyConfig& cfg) {
  numcore::Rng rng(cfg.seed.Derive("emgmm.init"));
  Mat mu(cfg.k, cfg.points.cols());
  for (std::size_t c = 0; c < cfg.k; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < cfg.labels.size(); ++i)
      if (static_cast<std::size_t>(cfg.labels[i]) == c) members.push_back(i);
    if (members.empty()) throw PreconditionError("em-gmm: every class needs a sample");
    auto src = cfg.points.row(members[rng.Index(members.size())]);
    std::copy(src.begin(), src.end(), mu.row(c).begin());
    if (cfg.init != InitMode::kSmart)
      for (std::size_t j = 0; j < mu.cols(); ++j) mu(c, j) += cfg.offset[j];
  }
  return mu;
}

namespace {

std::vector<int> Nearest(const Mat& points, const Mat& centroids) {
  const Mat hard = HardResponsibilities(points, centroids);
  return numcore::ArgmaxRows(hard);
}

}  // namespace

ToyTrajectory RunToy(const GmmToyConfig& cfg) {
  cfg.Validate();
  const double eta = cfg.init == InitMode::kEmOnly ? 0.0 : cfg.eta;
  ToyTrajectory t;
  Mat mu = InitialCentroids(cfg);
  Mat x = cfg.points;
  auto record = [&] {
    t.centroids.push_back(mu);
    t.points.push_back(x);
    t.ari.push_back(AdjustedRandIndex(Nearest(x, mu), cfg.labels));
    t.log_likelihood.push_back(LogLikelihood(x, mu));
  };
  record();
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    Mat r = cfg.hard ? HardResponsibilities(x, mu) : Responsibilities(x, mu);
    mu = MStepCentroids(x, r, mu, &t.reseeded);
    x = PointUpdate(x, r, mu, eta);
    t.resp.push_back(std::move(r));
    record();
  }
  return t;
}

void WriteTrajectoryCsv(const ToyTrajectory& t, std::ostream& out) {
  out << "iter,ari,log_likelihood\n";
  for (std::size_t i = 0; i < t.ari.size(); ++i)
    out << i << ',' << numcore::FormatDouble(t.ari[i]) << ','
        << numcore::FormatDouble(t.log_likelihood[i]) << '\n';
}

void WriteCentroidsCsv(const ToyTrajectory& t, std::ostream& out) {
  if (t.centroids.empty()) return;
  out << "iter,cluster";
  for (std::size_t j = 0; j < t.centroids.front().cols(); ++j) out << ",x" << j;
  out << '\n';
  for (std::size_t i = 0; i < t.centroids.size(); ++i) {
    const Mat& mu = t.centroids[i];
    for (std::size_t c = 0; c < mu.rows(); ++c) {
      out << i << ',' << c;
      for (double v : mu.row(c)) out << ',' << numcore::FormatDouble(v);
      out << '\n';
    }
  }
}

}  // namespace entropy_lab::emgmm
