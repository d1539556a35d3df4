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

#ifndef ENTROPY_LAB_HARNESS_CSV_H_
#define ENTROPY_LAB_HARNESS_CSV_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace entropy_lab::harness {

// A plain comma-separated table; cells never contain commas or newlines.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void Add(std::vector<std::string> row);
  // Column index by name; ParseError naming the column if absent.
  std::size_t Column(const std::string& name) const;

  bool operator==(const Table&) const = default;
};

void WriteTable(const Table& table, std::ostream& out);
// Throws ParseError on ragged rows or an empty input.
Table ReadTable(std::istream& in);

void SaveTable(const Table& table, const std::filesystem::path& path);
Table LoadTable(const std::filesystem::path& path);

// Writes `text` to `path`, creating parent directories. Throws
// PreconditionError if the file cannot be written.
void SaveText(const std::string& text, const std::filesystem::path& path);

}  // namespace entropy_lab::harness

#endif  // ENTROPY_LAB_HARNESS_CSV_H_
