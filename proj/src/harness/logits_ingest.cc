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

#include "entropy_lab/harness/logits_ingest.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::harness {

bool IngestedLogits::labelled() const {
  for (int l : labels)
    if (l >= 0) return true;
  return false;
}

IngestedLogits ReadLogitsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("logits file is empty");
  const auto header = numcore::SplitComma(line);
  if (header.empty() || numcore::Trim(header[0]) != "id")
    throw ParseError("logits header: missing column 'id'");
  if (header.size() < 2 || numcore::Trim(header[1]) != "label")
    throw ParseError("logits header: missing column 'label'");
  const std::size_t classes = header.size() - 2;
  if (classes < 2) throw ParseError("logits header: missing column 'l1'");
  for (std::size_t c = 0; c < classes; ++c) {
    const std::string want = "l" + std::to_string(c);
    if (numcore::Trim(header[c + 2]) != want)
      throw ParseError("logits header: missing column '" + want + "'");
  }

  IngestedLogits out;
  std::vector<double> values;
  std::unordered_set<std::string> seen;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (numcore::Trim(line).empty()) continue;
    const auto cells = numcore::SplitComma(line);
    const std::string where = "logits line " + std::to_string(lineno);
    if (cells.size() != header.size())
      throw ParseError(where + ": expected " + std::to_string(header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    std::string id(numcore::Trim(cells[0]));
    if (!seen.insert(id).second) throw ParseError(where + ": duplicated id '" + id + "'");
    const long long label = numcore::ParseInt(numcore::Trim(cells[1]), where + " label");
    if (label < -1 || label >= static_cast<long long>(classes))
      throw ParseError(where + ": label " + std::to_string(label) + " out of range");
    for (std::size_t c = 0; c < classes; ++c) {
      const double v = numcore::ParseDouble(numcore::Trim(cells[c + 2]),
                                            where + " column l" + std::to_string(c));
      if (!std::isfinite(v)) throw ParseError(where + ": non-finite logit");
      values.push_back(v);
    }
    out.ids.push_back(std::move(id));
    out.labels.push_back(static_cast<int>(label));
  }
  out.probs = numcore::SoftmaxRows(numcore::Mat(out.ids.size(), classes, std::move(values)));
  return out;
}

IngestedLogits LoadLogitsCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open logits file " + path.string());
  return ReadLogitsCsv(in);
}

}  // namespace entropy_lab::harness
