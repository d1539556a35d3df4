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

#ifndef ENTROPY_LAB_NUMCORE_TEXT_H_
#define ENTROPY_LAB_NUMCORE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace entropy_lab::numcore {

// Shortest decimal string that parses back to exactly `v`.
std::string FormatDouble(double v);

// Whole-string parse; throws ParseError naming `what` on failure.
double ParseDouble(std::string_view s, std::string_view what);
long long ParseInt(std::string_view s, std::string_view what);

// Splits on commas; no quoting (none of our files need it).
std::vector<std::string> SplitComma(std::string_view line);

std::string_view Trim(std::string_view s);

}  // namespace entropy_lab::numcore

#endif  // ENTROPY_LAB_NUMCORE_TEXT_H_
