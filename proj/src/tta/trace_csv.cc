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

#include "entropy_lab/tta/trace_csv.h"

#include <istream>
#include <ostream>
#include <string>

#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::tta {
namespace {

using numcore::FormatDouble;

std::string Opt(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

std::optional<double> ParseOpt(const std::string& cell, const char* what) {
  if (numcore::Trim(cell).empty()) return std::nullopt;
  return numcore::ParseDouble(cell, what);
}

std::vector<std::string> ExpectHeader(std::istream& in, const std::string& expected) {
  std::string line;
  if (!std::getline(in, line) || std::string(numcore::Trim(line)) != expected)
    throw ParseError("expected CSV header '" + expected + "'");
  return numcore::SplitComma(expected);
}

}  // namespace

void WriteTraceCsv(const Trace& trace, std::ostream& out) {
  out << "iter,holdout_acc,mean_entropy,silhouette,shift_distance\n";
  for (const auto& r : trace.records) {
    out << r.iter << ',' << Opt(r.holdout_acc) << ',' << Opt(r.mean_entropy) << ','
        << Opt(r.silhouette) << ',' << Opt(r.shift_distance) << '\n';
  }
}

Trace ReadTraceCsv(std::istream& in) {
  const auto header =
      ExpectHeader(in, "iter,holdout_acc,mean_entropy,silhouette,shift_distance");
  Trace trace;
  std::string line;
  while (std::getline(in, line)) {
    if (numcore::Trim(line).empty()) continue;
    const auto cells = numcore::SplitComma(numcore::Trim(line));
    if (cells.size() != header.size()) throw ParseError("trace CSV: ragged row");
    TraceRecord r;
    r.iter = static_cast<std::size_t>(numcore::ParseInt(cells[0], "iter"));
    r.holdout_acc = ParseOpt(cells[1], "holdout_acc");
    r.mean_entropy = ParseOpt(cells[2], "mean_entropy");
    r.silhouette = ParseOpt(cells[3], "silhouette");
    r.shift_distance = ParseOpt(cells[4], "shift_distance");
    trace.records.push_back(std::move(r));
  }
  return trace;
}

void WriteFlipsCsv(const FlipTracker& tracker, std::ostream& out) {
  out << "id,init_pred,init_conf,percentile,final_pred,flipped\n";
  const bool done = tracker.finalized();
  for (std::size_t i = 0; i < tracker.size(); ++i) {
    out << i << ',' << tracker.initial_predictions()[i] << ','
        << FormatDouble(tracker.initial_confidences()[i]) << ','
        << FormatDouble(tracker.percentiles()[i]) << ',';
    if (done) {
      const int f = tracker.final_predictions()[i];
      out << f << ',' << (f != tracker.initial_predictions()[i] ? 1 : 0);
    } else {
      out << ',';
    }
    out << '\n';
  }
}

std::vector<FlipRow> ReadFlipsCsv(std::istream& in) {
  const auto header = ExpectHeader(in, "id,init_pred,init_conf,percentile,final_pred,flipped");
  std::vector<FlipRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (numcore::Trim(line).empty()) continue;
    const auto cells = numcore::SplitComma(numcore::Trim(line));
    if (cells.size() != header.size()) throw ParseError("flips CSV: ragged row");
    FlipRow r;
    r.id = static_cast<std::size_t>(numcore::ParseInt(cells[0], "id"));
    r.init_pred = static_cast<int>(numcore::ParseInt(cells[1], "init_pred"));
    r.init_conf = numcore::ParseDouble(cells[2], "init_conf");
    r.percentile = numcore::ParseDouble(cells[3], "percentile");
    if (!numcore::Trim(cells[4]).empty())
      r.final_pred = static_cast<int>(numcore::ParseInt(cells[4], "final_pred"));
    if (!numcore::Trim(cells[5]).empty())
      r.flipped = numcore::ParseInt(cells[5], "flipped") != 0;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace entropy_lab::tta
