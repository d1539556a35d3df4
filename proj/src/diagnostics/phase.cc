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

#include "entropy_lab/diagnostics/phase.h"

#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/stats.h"

namespace entropy_lab::diagnostics {

namespace {

std::optional<double> Delta(const std::optional<double>& start, const std::optional<double>& end) {
  if (!start || !end) return std::nullopt;
  return *end - *start;
}

PhaseDeltas Between(const tta::TraceRecord& a, const tta::TraceRecord& b) {
  PhaseDeltas d;
  d.accuracy = *b.holdout_acc - *a.holdout_acc;
  d.silhouette = Delta(a.silhouette, b.silhouette);
  d.shift_distance = Delta(a.shift_distance, b.shift_distance);
  return d;
}

std::optional<double> SafeSpearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 3) return std::nullopt;
  try {
    return numcore::Spearman(x, y);
  } catch (const UndefinedError&) {
    return std::nullopt;
  }
}

}  // namespace

PhaseReport MakePhaseReport(const tta::Trace& trace) {
  std::vector<const tta::TraceRecord*> recs;
  for (const auto& r : trace.records)
    if (r.holdout_acc) recs.push_back(&r);
  if (recs.size() < 3)
    throw PreconditionError("phase_report: needs at least three records with accuracy");
  std::size_t peak = 0;
  for (std::size_t i = 1; i < recs.size(); ++i)
    if (*recs[i]->holdout_acc > *recs[peak]->holdout_acc) peak = i;

  PhaseReport out;
  out.peak_record = peak;
  out.peak_iter = recs[peak]->iter;
  out.initial_accuracy = *recs.front()->holdout_acc;
  out.peak_accuracy = *recs[peak]->holdout_acc;
  out.final_accuracy = *recs.back()->holdout_acc;
  out.phase1 = Between(*recs.front(), *recs[peak]);
  if (peak + 1 < recs.size()) out.phase2 = Between(*recs[peak], *recs.back());
  return out;
}

PhaseCorrelations CorrelatePhases(const std::vector<PhaseReport>& reports) {
  std::vector<double> acc1, sil1, acc1s, shift1;
  std::vector<double> acc2, sil2, acc2s, shift2;
  for (const auto& r : reports) {
    if (r.phase1.silhouette) {
      acc1.push_back(r.phase1.accuracy);
      sil1.push_back(*r.phase1.silhouette);
    }
    if (r.phase1.shift_distance) {
      acc1s.push_back(r.phase1.accuracy);
      shift1.push_back(*r.phase1.shift_distance);
    }
    if (!r.phase2) continue;
    if (r.phase2->silhouette) {
      acc2.push_back(r.phase2->accuracy);
      sil2.push_back(*r.phase2->silhouette);
    }
    if (r.phase2->shift_distance) {
      acc2s.push_back(r.phase2->accuracy);
      shift2.push_back(*r.phase2->shift_distance);
    }
  }
  PhaseCorrelations out;
  out.silhouette_phase1 = SafeSpearman(sil1, acc1);
  out.silhouette_phase2 = SafeSpearman(sil2, acc2);
  out.shift_phase1 = SafeSpearman(shift1, acc1s);
  out.shift_phase2 = SafeSpearman(shift2, acc2s);
  return out;
}

}  // namespace entropy_lab::diagnostics
