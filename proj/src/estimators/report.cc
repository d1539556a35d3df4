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

#include "entropy_lab/estimators/report.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "entropy_lab/estimators/baselines.h"
#include "entropy_lab/estimators/cot.h"
#include "entropy_lab/estimators/weighted_flips.h"
#include "entropy_lab/nnet/train.h"
#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"
#include "entropy_lab/tta/adapt.h"

namespace entropy_lab::estimators {

using numcore::FormatDouble;

std::string MethodName(Method m) {
  switch (m) {
    case Method::kAc: return "AC";
    case Method::kDoc: return "DoC";
    case Method::kAtc: return "ATC";
    case Method::kCot: return "COT";
    case Method::kWf: return "WF";
  }
  return "?";
}

Method ParseMethod(const std::string& name) {
  for (Method m : AllMethods()) {
    std::string a = MethodName(m);
    std::string b = name;
    std::transform(a.begin(), a.end(), a.begin(), ::tolower);
    std::transform(b.begin(), b.end(), b.begin(), ::tolower);
    if (a == b) return m;
  }
  throw ConfigError("unknown estimator '" + name + "'");
}

std::vector<Method> AllMethods() {
  return {Method::kAc, Method::kDoc, Method::kAtc, Method::kCot, Method::kWf};
}

std::vector<SummaryRow> Summarize(const std::vector<EstimateRow>& rows) {
  std::vector<std::string> order;
  for (const auto& r : rows)
    if (r.abs_error && std::find(order.begin(), order.end(), r.method) == order.end())
      order.push_back(r.method);
  std::vector<SummaryRow> out;
  for (const auto& method : order) {
    std::vector<double> errors;
    for (const auto& r : rows)
      if (r.method == method && r.abs_error) errors.push_back(*r.abs_error);
    SummaryRow s;
    s.method = method;
    s.datasets = errors.size();
    double total = 0.0;
    for (double e : errors) total += e;
    s.average = total / static_cast<double>(errors.size());
    s.worst = *std::max_element(errors.begin(), errors.end());
    s.average_excluding_worst =
        errors.size() > 1 ? (total - s.worst) / static_cast<double>(errors.size() - 1) : s.average;
    out.push_back(s);
  }
  return out;
}

double MethodMae(const std::vector<EstimateRow>& rows, const std::string& method) {
  double total = 0.0;
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.method != method || !r.abs_error) continue;
    total += *r.abs_error;
    ++n;
  }
  if (n == 0) throw PreconditionError("no rows with truth for method " + method);
  return total / static_cast<double>(n);
}

void WriteReportCsv(const std::vector<EstimateRow>& rows, std::ostream& out) {
  out << "dataset,method,estimate,truth,abs_error\n";
  for (const auto& r : rows) {
    out << r.dataset << ',' << r.method << ',' << FormatDouble(r.estimate) << ','
        << (r.truth ? FormatDouble(*r.truth) : "") << ','
        << (r.abs_error ? FormatDouble(*r.abs_error) : "") << '\n';
  }
}

std::vector<EstimateRow> ReadReportCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      std::string(numcore::Trim(line)) != "dataset,method,estimate,truth,abs_error")
    throw ParseError("report CSV: unexpected header");
  std::vector<EstimateRow> rows;
  while (std::getline(in, line)) {
    if (numcore::Trim(line).empty()) continue;
    const auto cells = numcore::SplitComma(numcore::Trim(line));
    if (cells.size() != 5) throw ParseError("report CSV: ragged row");
    EstimateRow r;
    r.dataset = cells[0];
    r.method = cells[1];
    r.estimate = numcore::ParseDouble(cells[2], "estimate");
    if (!cells[3].empty()) r.truth = numcore::ParseDouble(cells[3], "truth");
    if (!cells[4].empty()) r.abs_error = numcore::ParseDouble(cells[4], "abs_error");
    rows.push_back(std::move(r));
  }
  return rows;
}

void WriteSummaryCsv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << "method,datasets,average,worst_case,average_excluding_worst\n";
  for (const auto& s : rows) {
    out << s.method << ',' << s.datasets << ',' << FormatDouble(s.average) << ','
        << FormatDouble(s.worst) << ',' << FormatDouble(s.average_excluding_worst) << '\n';
  }
}

double TrueAccuracy(const nnet::Classifier& pretrained, const datagen::LabeledSet& set) {
  return 100.0 * nnet::EvaluateAccuracy(pretrained, set, nnet::BnMode::kFrozenStats);
}

FlipMeasurement MeasureFlips(const SuiteContext& ctx, const datagen::LabeledSet& set,
                             numcore::Seed seed) {
  tta::TtaConfig cfg = ctx.tta;
  const datagen::LabeledSet no_holdout;
  const tta::AdaptResult run = tta::Adapt(*ctx.pretrained, set, no_holdout, cfg, seed);
  FlipMeasurement m;
  m.weighted = WeightedFlips(run.tracker);
  m.unweighted = UnweightedFlips(run.tracker);
  m.tracked = run.tracker.size();
  return m;
}

namespace {

std::vector<double> Confidences(const numcore::Mat& probs) { return numcore::MaxRows(probs); }

}  // namespace

DatasetEvaluation EvaluateDataset(const SuiteContext& ctx, const std::string& name,
                                  const datagen::LabeledSet& set,
                                  const std::vector<Method>& methods) {
  if (ctx.pretrained == nullptr) throw PreconditionError("evaluate: no pretrained model");
  const nnet::Classifier& net = *ctx.pretrained;
  const double truth = TrueAccuracy(net, set);
  const numcore::Mat probs = numcore::SoftmaxRows(
      nnet::PredictBatched(net, set.features, nnet::BnMode::kFrozenStats, 256).logits);

  std::optional<numcore::Mat> val_probs;
  double val_acc = 0.0;
  auto need_val = [&](Method m) {
    if (ctx.val == nullptr || ctx.val->size() == 0)
      throw PreconditionError(MethodName(m) + " needs a labelled validation set");
    if (!val_probs) {
      val_probs = numcore::SoftmaxRows(
          nnet::PredictBatched(net, ctx.val->features, nnet::BnMode::kFrozenStats, 256).logits);
      val_acc = 100.0 * datagen::Accuracy(numcore::ArgmaxRows(*val_probs), ctx.val->labels);
    }
  };

  DatasetEvaluation out;
  for (Method m : methods) {
    double estimate = 0.0;
    switch (m) {
      case Method::kAc:
        estimate = AverageConfidence(probs);
        break;
      case Method::kDoc:
        need_val(m);
        estimate = DifferenceOfConfidences(probs, *val_probs, val_acc);
        break;
      case Method::kAtc: {
        need_val(m);
        const std::vector<int> preds = numcore::ArgmaxRows(*val_probs);
        std::vector<bool> correct(preds.size());
        for (std::size_t i = 0; i < preds.size(); ++i) correct[i] = preds[i] == ctx.val->labels[i];
        const double t = AtcFit(Confidences(*val_probs), correct);
        estimate = AtcPredict(Confidences(probs), t);
        break;
      }
      case Method::kCot: {
        if (ctx.source_marginal.empty())
          throw PreconditionError("COT needs the source class marginal");
        const std::size_t rows = ctx.cot_max_rows == 0
                                     ? probs.rows()
                                     : std::min(probs.rows(), ctx.cot_max_rows);
        std::vector<std::size_t> idx(rows);
        for (std::size_t i = 0; i < rows; ++i) idx[i] = i;
        estimate = Cot(probs.SelectRows(idx), ctx.source_marginal).estimate;
        break;
      }
      case Method::kWf: {
        if (!ctx.curve) throw PreconditionError("WF needs a fitted calibration curve");
        const FlipMeasurement f =
            MeasureFlips(ctx, set, ctx.seed.Derive("estimate.flips." + name));
        out.flips = f;
        estimate = PredictAccuracy(*ctx.curve, ctx.curve->weighted ? f.weighted : f.unweighted);
        break;
      }
    }
    EstimateRow row;
    row.dataset = name;
    row.method = MethodName(m);
    row.estimate = ClampPercent(estimate);
    row.truth = truth;
    row.abs_error = std::abs(row.estimate - truth);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<DatasetEvaluation> EvaluateSuite(
    const SuiteContext& ctx,
    const std::vector<std::pair<std::string, datagen::LabeledSet>>& suite,
    const std::vector<Method>& methods) {
  std::vector<DatasetEvaluation> out;
  out.reserve(suite.size());
  for (const auto& [name, set] : suite) out.push_back(EvaluateDataset(ctx, name, set, methods));
  return out;
}

}  // namespace entropy_lab::estimators
