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

#ifndef ENTROPY_LAB_TTA_TRACE_CSV_H_
#define ENTROPY_LAB_TTA_TRACE_CSV_H_

#include <iosfwd>
#include <vector>

#include "entropy_lab/tta/adapt.h"

namespace entropy_lab::tta {

// `iter,holdout_acc,mean_entropy,silhouette,shift_distance`; absent values
// are empty fields. Projections are not part of the CSV.
void WriteTraceCsv(const Trace& trace, std::ostream& out);
Trace ReadTraceCsv(std::istream& in);

// `id,init_pred,init_conf,percentile,final_pred,flipped`. An unfinalized
// tracker writes empty final_pred/flipped fields.
void WriteFlipsCsv(const FlipTracker& tracker, std::ostream& out);

struct FlipRow {
  std::size_t id = 0;
  int init_pred = 0;
  double init_conf = 0.0;
  double percentile = 0.0;
  std::optional<int> final_pred;
  std::optional<bool> flipped;

  bool operator==(const FlipRow&) const = default;
};
std::vector<FlipRow> ReadFlipsCsv(std::istream& in);

}  // namespace entropy_lab::tta

#endif  // ENTROPY_LAB_TTA_TRACE_CSV_H_
