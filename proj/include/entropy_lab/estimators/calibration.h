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

#ifndef ENTROPY_LAB_ESTIMATORS_CALIBRATION_H_
#define ENTROPY_LAB_ESTIMATORS_CALIBRATION_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::estimators {

// Polynomial from (weighted) flips to accuracy percent.
struct CalibrationCurve {
  int degree = 2;
  bool weighted = true;
  std::vector<double> coefficients;  // highest power first, degree + 1 entries

  // Raw polynomial value, no clamping.
  double Evaluate(double x) const;

  bool operator==(const CalibrationCurve&) const = default;
};

// The fit could not be computed (too few pairs or a rank-deficient system).
class FitFailed : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct FitPair {
  double x = 0.0;         // WF, or the flip count for unweighted curves
  double accuracy = 0.0;  // percent
};

// Least-squares polynomial of degree 1..3. Throws ConfigError for other
// degrees and FitFailed for fewer than degree + 1 pairs or fewer distinct x
// values than needed.
CalibrationCurve FitCurve(const std::vector<FitPair>& pairs, int degree, bool weighted);

// Polynomial value clamped to [0, 100].
double PredictAccuracy(const CalibrationCurve& curve, double x);

// Text form: `degree,weighted,c0,c1,...` header line plus one value line.
void WriteCurveCsv(const CalibrationCurve& curve, std::ostream& out);
CalibrationCurve ReadCurveCsv(std::istream& in);

// "weighted-quadratic", "unweighted-linear", ...
std::string CurveName(int degree, bool weighted);

}  // namespace entropy_lab::estimators

#endif  // ENTROPY_LAB_ESTIMATORS_CALIBRATION_H_
