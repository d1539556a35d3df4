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

#ifndef ENTROPY_LAB_HARNESS_LOGITS_INGEST_H_
#define ENTROPY_LAB_HARNESS_LOGITS_INGEST_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::harness {

// Logits dumped by an external model, softmaxed on load.
struct IngestedLogits {
  std::vector<std::string> ids;
  std::vector<int> labels;  // -1 for unlabelled rows
  numcore::Mat probs;       // n x C, rows sum to 1

  bool labelled() const;  // at least one label >= 0
};

// Header `id,label,l0,...,l{C-1}`. Throws ParseError on a missing or
// misnamed column (naming it), ragged rows, non-numeric cells, labels
// outside -1..C-1 and duplicated ids.
IngestedLogits ReadLogitsCsv(std::istream& in);
IngestedLogits LoadLogitsCsv(const std::filesystem::path& path);

}  // namespace entropy_lab::harness

#endif  // ENTROPY_LAB_HARNESS_LOGITS_INGEST_H_
