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

#ifndef ENTROPY_LAB_HARNESS_PROJECTION_H_
#define ENTROPY_LAB_HARNESS_PROJECTION_H_

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::harness {

// Centered rows projected onto the top two principal components (n x 2).
// Each component's sign is fixed so that its largest-magnitude loading is
// positive. Needs at least two rows and two columns.
numcore::Mat ProjectPca2(const numcore::Mat& x);

}  // namespace entropy_lab::harness

#endif  // ENTROPY_LAB_HARNESS_PROJECTION_H_
