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

#include "entropy_lab/harness/csv.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::harness {

void Table::Add(std::vector<std::string> row) {
  if (row.size() != header.size())
    throw DimensionError("table row has " + std::to_string(row.size()) + " cells, header has " +
                         std::to_string(header.size()));
  rows.push_back(std::move(row));
}

std::size_t Table::Column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw ParseError("missing column '" + name + "'");
}

void WriteTable(const Table& table, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

Table ReadTable(std::istream& in) {
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty table");
  t.header = numcore::SplitComma(line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cells = numcore::SplitComma(line);
    if (cells.size() != t.header.size())
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(t.header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

void SaveTable(const Table& table, const std::filesystem::path& path) {
  std::ostringstream s;
  WriteTable(table, s);
  SaveText(s.str(), path);
}

Table LoadTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path.string());
  return ReadTable(in);
}

void SaveText(const std::string& text, const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path.string());
  out << text;
  if (!out) throw PreconditionError("write failed: " + path.string());
}

}  // namespace entropy_lab::harness
