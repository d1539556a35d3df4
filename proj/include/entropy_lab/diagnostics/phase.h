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

#ifndef ENTROPY_LAB_DIAGNOSTICS_PHASE_H_
#define ENTROPY_LAB_DIAGNOSTICS_PHASE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "entropy_lab/tta/adapt.h"

namespace entropy_lab::diagnostics {

// End-minus-start changes over one phase. A metric is absent when the trace
// does not carry it at both ends.
struct PhaseDeltas {
  double accuracy = 0.0;
  std::optional<double> silhouette;
  std::optional<double> shift_distance;
};

struct PhaseReport {
  std::size_t peak_record = 0;  // index into the trace records
  std::size_t peak_iter = 0;
  double initial_accuracy = 0.0;
  double peak_accuracy = 0.0;
  double final_accuracy = 0.0;
  PhaseDeltas phase1;                 // records [0, peak]
  std::optional<PhaseDeltas> phase2;  // records [peak, last]; absent if peak is last
};

// Peak = earliest record with the highest holdout accuracy. Only records with
// accuracy are considered. Throws PreconditionError with fewer than three.
PhaseReport MakePhaseReport(const tta::Trace& trace);

// Spearman correlations between per-dataset metric deltas and accuracy
// deltas within one phase; absent when fewer than three datasets carry the
// metric or the correlation is undefined.
struct PhaseCorrelations {
  std::optional<double> silhouette_phase1;
  std::optional<double> silhouette_phase2;
  std::optional<double> shift_phase1;
  std::optional<double> shift_phase2;
};
PhaseCorrelations CorrelatePhases(const std::vector<PhaseReport>& reports);

}  // namespace entropy_lab::diagnostics

#endif  // ENTROPY_LAB_DIAGNOSTICS_PHASE_H_
