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

#ifndef ENTROPY_LAB_NUMCORE_MAT_H_
#define ENTROPY_LAB_NUMCORE_MAT_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entropy_lab::numcore {

// Dense row-major matrix of doubles. Construction from explicit data rejects
// non-finite entries.
class Mat {
 public:
  Mat() = default;
  // Zero-filled.
  Mat(std::size_t rows, std::size_t cols);
  // Takes ownership of `data`; throws DimensionError on a size mismatch and
  // std::invalid_argument on NaN/Inf.
  Mat(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Mat FromRows(std::initializer_list<std::initializer_list<double>> rows);
  static Mat FromRows(const std::vector<std::vector<double>>& rows);
  static Mat Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  // Rows selected by index, in the given order.
  Mat SelectRows(std::span<const std::size_t> indices) const;

  bool operator==(const Mat& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Mat MatMul(const Mat& a, const Mat& b);
// a^T * b without materializing the transpose.
Mat MatMulTransA(const Mat& a, const Mat& b);
// a * b^T without materializing the transpose.
Mat MatMulTransB(const Mat& a, const Mat& b);
Mat Transpose(const Mat& a);

// Row-wise softmax with per-row max subtraction.
Mat SoftmaxRows(const Mat& logits);
Mat LogSoftmaxRows(const Mat& logits);

// Index of the largest entry of each row (first on ties).
std::vector<int> ArgmaxRows(const Mat& m);
std::vector<double> MaxRows(const Mat& m);
std::vector<double> ColumnMeans(const Mat& m);

double SquaredDistance(std::span<const double> a, std::span<const double> b);
double Distance(std::span<const double> a, std::span<const double> b);
double Dot(std::span<const double> a, std::span<const double> b);
double Norm(std::span<const double> a);

// Largest |a_ij - b_ij|; shapes must match.
double MaxAbsDiff(const Mat& a, const Mat& b);

}  // namespace entropy_lab::numcore

#endif  // ENTROPY_LAB_NUMCORE_MAT_H_
