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

#ifndef ENTROPY_LAB_NUMCORE_STATS_H_
#define ENTROPY_LAB_NUMCORE_STATS_H_

#include <span>
#include <vector>

namespace entropy_lab::numcore {

// 1-based ranks; tied values share the average of the ranks they span.
std::vector<double> AverageRanks(std::span<const double> x);

// Spearman rank correlation with average-rank ties. Requires equal lengths
// >= 3; throws UndefinedError if either input is constant.
double Spearman(std::span<const double> x, std::span<const double> y);

// Pearson correlation; same preconditions as Spearman.
double Pearson(std::span<const double> x, std::span<const double> y);

double Mean(std::span<const double> x);
// Population standard deviation (divides by n).
double StdDev(std::span<const double> x);

}  // namespace entropy_lab::numcore

#endif  // ENTROPY_LAB_NUMCORE_STATS_H_
