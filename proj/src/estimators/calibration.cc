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

#include "entropy_lab/estimators/calibration.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "entropy_lab/estimators/baselines.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::estimators {

double CalibrationCurve::Evaluate(double x) const {
  double y = 0.0;
  for (double c : coefficients) y = y * x + c;
  return y;
}

CalibrationCurve FitCurve(const std::vector<FitPair>& pairs, int degree, bool weighted) {
  if (degree < 1 || degree > 3)
    throw ConfigError("fit_curve: degree must be 1, 2 or 3 (got " + std::to_string(degree) + ")");
  const auto terms = static_cast<std::size_t>(degree) + 1;
  if (pairs.size() < terms)
    throw FitFailed("fit_curve: degree " + std::to_string(degree) + " needs at least " +
                    std::to_string(terms) + " pairs, got " + std::to_string(pairs.size()));
  std::vector<double> xs;
  for (const auto& p : pairs) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  const auto distinct =
      static_cast<std::size_t>(std::unique(xs.begin(), xs.end()) - xs.begin());
  if (distinct < terms)
    throw FitFailed("fit_curve: only " + std::to_string(distinct) +
                    " distinct x values for a degree-" + std::to_string(degree) + " fit");

  // Columns in powers of x / scale keep the system well conditioned; the
  // coefficients are rescaled afterwards.
  double scale = 0.0;
  for (const auto& p : pairs) scale = std::max(scale, std::abs(p.x));
  if (scale == 0.0) scale = 1.0;
  const auto n = static_cast<Eigen::Index>(pairs.size());
  Eigen::MatrixXd a(n, static_cast<Eigen::Index>(terms));
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = pairs[static_cast<std::size_t>(i)].x / scale;
    double pw = 1.0;
    for (std::size_t k = 0; k < terms; ++k) {
      a(i, static_cast<Eigen::Index>(k)) = pw;  // ascending powers
      pw *= t;
    }
    b(i) = pairs[static_cast<std::size_t>(i)].accuracy;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < static_cast<Eigen::Index>(terms))
    throw FitFailed("fit_curve: rank-deficient system");
  const Eigen::VectorXd sol = qr.solve(b);

  CalibrationCurve curve;
  curve.degree = degree;
  curve.weighted = weighted;
  curve.coefficients.resize(terms);
  for (std::size_t k = 0; k < terms; ++k)
    curve.coefficients[terms - 1 - k] =
        sol(static_cast<Eigen::Index>(k)) / std::pow(scale, static_cast<double>(k));
  return curve;
}

double PredictAccuracy(const CalibrationCurve& curve, double x) {
  return ClampPercent(curve.Evaluate(x));
}

void WriteCurveCsv(const CalibrationCurve& curve, std::ostream& out) {
  out << "degree,weighted";
  for (std::size_t k = 0; k < curve.coefficients.size(); ++k) out << ",c" << k;
  out << '\n' << curve.degree << ',' << (curve.weighted ? 1 : 0);
  for (double c : curve.coefficients) out << ',' << numcore::FormatDouble(c);
  out << '\n';
}

CalibrationCurve ReadCurveCsv(std::istream& in) {
  std::string header;
  std::string values;
  if (!std::getline(in, header) || !std::getline(in, values))
    throw ParseError("curve CSV: expected a header and a value line");
  const auto h = numcore::SplitComma(numcore::Trim(header));
  const auto v = numcore::SplitComma(numcore::Trim(values));
  if (h.size() < 3 || h[0] != "degree" || h[1] != "weighted")
    throw ParseError("curve CSV: header must start with degree,weighted");
  if (v.size() != h.size()) throw ParseError("curve CSV: value count differs from header");
  CalibrationCurve curve;
  curve.degree = static_cast<int>(numcore::ParseInt(v[0], "degree"));
  curve.weighted = numcore::ParseInt(v[1], "weighted") != 0;
  for (std::size_t k = 2; k < v.size(); ++k)
    curve.coefficients.push_back(numcore::ParseDouble(v[k], h[k]));
  if (curve.degree < 1 || curve.degree > 3 ||
      curve.coefficients.size() != static_cast<std::size_t>(curve.degree) + 1)
    throw ParseError("curve CSV: coefficient count does not match degree");
  return curve;
}

std::string CurveName(int degree, bool weighted) {
  static const char* kNames[] = {"", "linear", "quadratic", "cubic"};
  const std::string base = (degree >= 1 && degree <= 3) ? kNames[degree] : std::to_string(degree);
  return std::string(weighted ? "weighted-" : "unweighted-") + base;
}

}  // namespace entropy_lab::estimators
