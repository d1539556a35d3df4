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

#ifndef ENTROPY_LAB_ESTIMATORS_REPORT_H_
#define ENTROPY_LAB_ESTIMATORS_REPORT_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entropy_lab/datagen/labeled_set.h"
#include "entropy_lab/estimators/calibration.h"
#include "entropy_lab/nnet/classifier.h"
#include "entropy_lab/numcore/random.h"
#include "entropy_lab/tta/config.h"

namespace entropy_lab::estimators {

enum class Method { kAc, kDoc, kAtc, kCot, kWf };

std::string MethodName(Method m);  // "AC", "DoC", "ATC", "COT", "WF"
Method ParseMethod(const std::string& name);  // ConfigError on unknown names
std::vector<Method> AllMethods();

struct EstimateRow {
  std::string dataset;
  std::string method;
  double estimate = 0.0;  // percent
  std::optional<double> truth;
  std::optional<double> abs_error;

  bool operator==(const EstimateRow&) const = default;
};

// Table-style summary over rows that carry a truth value.
struct SummaryRow {
  std::string method;
  std::size_t datasets = 0;
  double average = 0.0;
  double worst = 0.0;
  // Mean with the single worst dataset removed; equals `average` for one row.
  double average_excluding_worst = 0.0;
};

// One SummaryRow per method, in order of first appearance.
std::vector<SummaryRow> Summarize(const std::vector<EstimateRow>& rows);

// Mean absolute error of one method's rows; PreconditionError if none.
double MethodMae(const std::vector<EstimateRow>& rows, const std::string& method);

// `dataset,method,estimate,truth,abs_error`.
void WriteReportCsv(const std::vector<EstimateRow>& rows, std::ostream& out);
std::vector<EstimateRow> ReadReportCsv(std::istream& in);
// `method,datasets,average,worst_case,average_excluding_worst`.
void WriteSummaryCsv(const std::vector<SummaryRow>& rows, std::ostream& out);

// Everything the estimators need besides the dataset itself.
struct SuiteContext {
  const nnet::Classifier* pretrained = nullptr;
  const datagen::LabeledSet* val = nullptr;  // labelled clean validation set
  std::optional<CalibrationCurve> curve;     // required for WF
  tta::TtaConfig tta;                        // adaptation run that produces flips
  std::vector<double> source_marginal;       // class distribution for COT
  // COT solves an exact n x n assignment; larger datasets are evaluated on
  // their first cot_max_rows rows. 0 means no limit.
  std::size_t cot_max_rows = 1000;
  numcore::Seed seed;
};

struct FlipMeasurement {
  double weighted = 0.0;
  double unweighted = 0.0;
  std::size_t tracked = 0;
};

// Pretrained-model accuracy (frozen statistics) in percent; unlabelled rows
// count as wrong.
double TrueAccuracy(const nnet::Classifier& pretrained, const datagen::LabeledSet& set);

// Adapts on `set` with ctx.tta and measures flips on the tracked prefix.
FlipMeasurement MeasureFlips(const SuiteContext& ctx, const datagen::LabeledSet& set,
                             numcore::Seed seed);

struct DatasetEvaluation {
  std::vector<EstimateRow> rows;
  std::optional<FlipMeasurement> flips;  // present when WF was requested
};

// Runs the requested estimators on one dataset. Throws PreconditionError
// when a prerequisite is missing (curve for WF, val set for DoC/ATC).
DatasetEvaluation EvaluateDataset(const SuiteContext& ctx, const std::string& name,
                                  const datagen::LabeledSet& set,
                                  const std::vector<Method>& methods);

// EvaluateDataset over the suite; flips for dataset i use a seed derived
// from ctx.seed and the dataset name.
std::vector<DatasetEvaluation> EvaluateSuite(
    const SuiteContext& ctx,
    const std::vector<std::pair<std::string, datagen::LabeledSet>>& suite,
    const std::vector<Method>& methods);

}  // namespace entropy_lab::estimators

#endif  // ENTROPY_LAB_ESTIMATORS_REPORT_H_
