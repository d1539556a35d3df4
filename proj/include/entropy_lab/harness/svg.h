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

#ifndef ENTROPY_LAB_HARNESS_SVG_H_
#define ENTROPY_LAB_HARNESS_SVG_H_

#include <string>
#include <vector>

namespace entropy_lab::harness {

struct Series {
  enum class Style { kLine, kPoints };
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  Style style = Style::kLine;
  // Optional per-point colour index (points only); empty means one colour.
  std::vector<int> group;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

// Standalone SVG document. Axes span the finite data range; non-finite
// points are skipped.
std::string RenderSvg(const Plot& plot);

}  // namespace entropy_lab::harness

#endif  // ENTROPY_LAB_HARNESS_SVG_H_
