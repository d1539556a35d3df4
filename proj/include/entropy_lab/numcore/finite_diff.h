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

#ifndef ENTROPY_LAB_NUMCORE_FINITE_DIFF_H_
#define ENTROPY_LAB_NUMCORE_FINITE_DIFF_H_

#include <functional>
#include <span>
#include <vector>

namespace entropy_lab::numcore {

using ScalarFn = std::function<double(std::span<const double>)>;

// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h for every coordinate.
// Gradient-check oracle; intentionally shares no code with analytic gradients.
std::vector<double> FiniteDiffGrad(const ScalarFn& f, std::span<const double> x,
                                   double h);

}  // namespace entropy_lab::numcore

#endif  // ENTROPY_LAB_NUMCORE_FINITE_DIFF_H_
