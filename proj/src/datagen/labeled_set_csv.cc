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

#include "entropy_lab/datagen/labeled_set_csv.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::datagen {

using numcore::FormatDouble;

void WriteLabeledSetCsv(const LabeledSet& set, std::ostream& out) {
  out << "id,label";
  for (std::size_t j = 0; j < set.dim(); ++j) out << ",f" << j;
  out << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << i << ',' << set.labels[i];
    for (double v : set.features.row(i)) out << ',' << FormatDouble(v);
    out << '\n';
  }
}

LabeledSet ReadLabeledSetCsv(std::istream& in, std::string provenance) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("labeled set CSV: missing header");
  const auto header = numcore::SplitComma(numcore::Trim(line));
  if (header.size() < 3 || header[0] != "id" || header[1] != "label")
    throw ParseError("labeled set CSV: header must start with id,label");
  const std::size_t d = header.size() - 2;
  for (std::size_t j = 0; j < d; ++j) {
    if (header[j + 2] != "f" + std::to_string(j))
      throw ParseError("labeled set CSV: expected column f" + std::to_string(j));
  }
  std::vector<double> data;
  std::vector<int> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (numcore::Trim(line).empty()) continue;
    const auto cells = numcore::SplitComma(numcore::Trim(line));
    if (cells.size() != d + 2)
      throw ParseError("labeled set CSV: line " + std::to_string(line_no) +
                       " has " + std::to_string(cells.size()) + " cells");
    labels.push_back(static_cast<int>(numcore::ParseInt(cells[1], "label")));
    for (std::size_t j = 0; j < d; ++j)
      data.push_back(numcore::ParseDouble(cells[j + 2], header[j + 2]));
  }
  return {numcore::Mat(labels.size(), d, std::move(data)), std::move(labels),
          std::move(provenance)};
}

void SaveLabeledSetCsv(const LabeledSet& set, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path.string());
  WriteLabeledSetCsv(set, out);
}

LabeledSet LoadLabeledSetCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("missing data file " + path.string());
  return ReadLabeledSetCsv(in, path.stem().string());
}

}  // namespace entropy_lab::datagen
