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

#include "entropy_lab/harness/projection.h"

#include <Eigen/Dense>
#include <cmath>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::harness {

numcore::Mat ProjectPca2(const numcore::Mat& x) {
  const auto n = static_cast<Eigen::Index>(x.rows());
  const auto d = static_cast<Eigen::Index>(x.cols());
  if (n < 2 || d < 2) throw PreconditionError("pca: need at least 2 rows and 2 columns");
  Eigen::MatrixXd m(n, d);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = x(i, j);
  const Eigen::RowVectorXd mean = m.colwise().mean();
  m.rowwise() -= mean;
  const Eigen::MatrixXd cov = (m.transpose() * m) / static_cast<double>(n - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  if (eig.info() != Eigen::Success) throw PreconditionError("pca: eigendecomposition failed");
  // Eigenvalues come in ascending order.
  Eigen::MatrixXd basis(d, 2);
  for (int k = 0; k < 2; ++k) {
    Eigen::VectorXd v = eig.eigenvectors().col(d - 1 - k);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0) v = -v;
    basis.col(k) = v;
  }
  const Eigen::MatrixXd proj = m * basis;
  numcore::Mat out(x.rows(), 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(static_cast<std::size_t>(i), 0) = proj(i, 0);
    out(static_cast<std::size_t>(i), 1) = proj(i, 1);
  }
  return out;
}

}  // namespace entropy_lab::harness
