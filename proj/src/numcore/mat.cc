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

#include "entropy_lab/numcore/mat.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::numcore {

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("Mat: data length " + std::to_string(data_.size()) +
                         " != " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Mat: non-finite entry");
  }
}

Mat Mat::FromRows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> tmp;
  for (const auto& r : rows) tmp.emplace_back(r);
  return FromRows(tmp);
}

Mat Mat::FromRows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t d = n == 0 ? 0 : rows.front().size();
  std::vector<double> data;
  data.reserve(n * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw DimensionError("Mat::FromRows: ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Mat(n, d, std::move(data));
}

Mat Mat::Identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::SelectRows(std::span<const std::size_t> indices) const {
  Mat out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw DimensionError("SelectRows: index out of range");
    std::copy_n(data_.begin() + indices[i] * cols_, cols_,
                out.data_.begin() + i * cols_);
  }
  return out;
}

Mat MatMul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  Mat c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* out = c.row(i).data();
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      const double* brow = b.row(k).data();
      for (std::size_t j = 0; j < n; ++j) out[j] += aik * brow[j];
    }
  }
  return c;
}

Mat MatMulTransA(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionError("matmul_trans_a: row mismatch");
  Mat c(a.cols(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const double* brow = b.row(k).data();
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const double aki = a(k, i);
      double* out = c.row(i).data();
      for (std::size_t j = 0; j < n; ++j) out[j] += aki * brow[j];
    }
  }
  return c;
}

Mat MatMulTransB(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw DimensionError("matmul_trans_b: col mismatch");
  Mat c(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto arow = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) c(i, j) = Dot(arow, b.row(j));
  }
  return c;
}

Mat Transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Mat SoftmaxRows(const Mat& logits) {
  Mat p(logits.rows(), logits.cols());
  for (std::size_t i = 0; i < logits.rows(); ++i) {
    const auto in = logits.row(i);
    auto out = p.row(i);
    const double mx = *std::max_element(in.begin(), in.end());
    double z = 0.0;
    for (std::size_t j = 0; j < in.size(); ++j) {
      out[j] = std::exp(in[j] - mx);
      z += out[j];
    }
    for (double& v : out) v /= z;
  }
  return p;
}

Mat LogSoftmaxRows(const Mat& logits) {
  Mat lp(logits.rows(), logits.cols());
  for (std::size_t i = 0; i < logits.rows(); ++i) {
    const auto in = logits.row(i);
    auto out = lp.row(i);
    const double mx = *std::max_element(in.begin(), in.end());
    double z = 0.0;
    for (double v : in) z += std::exp(v - mx);
    const double lse = mx + std::log(z);
    for (std::size_t j = 0; j < in.size(); ++j) out[j] = in[j] - lse;
  }
  return lp;
}

std::vector<int> ArgmaxRows(const Mat& m) {
  std::vector<int> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    out[i] = static_cast<int>(std::max_element(r.begin(), r.end()) - r.begin());
  }
  return out;
}

std::vector<double> MaxRows(const Mat& m) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    out[i] = *std::max_element(r.begin(), r.end());
  }
  return out;
}

std::vector<double> ColumnMeans(const Mat& m) {
  std::vector<double> mean(m.cols(), 0.0);
  if (m.rows() == 0) return mean;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) mean[j] += r[j];
  }
  for (double& v : mean) v /= static_cast<double>(m.rows());
  return mean;
}

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double Distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(SquaredDistance(a, b));
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

double MaxAbsDiff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("MaxAbsDiff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace entropy_lab::numcore
