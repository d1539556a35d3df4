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

#ifndef ENTROPY_LAB_ESTIMATORS_WEIGHTED_FLIPS_H_
#define ENTROPY_LAB_ESTIMATORS_WEIGHTED_FLIPS_H_

#include <cstddef>

#include "entropy_lab/tta/flip_tracker.h"

namespace entropy_lab::estimators {

// Sum of confidence percentiles over flipped inputs. Throws PreconditionError
// for an unfinalized tracker.
double WeightedFlips(const tta::FlipTracker& tracker);

// Flip count as a real, the unweighted counterpart of WeightedFlips.
double UnweightedFlips(const tta::FlipTracker& tracker);

// wf_small * n_ref / n_small. Throws PreconditionError if n_small == 0.
double LimitedScale(double wf_small, std::size_t n_small, std::size_t n_ref = 1000);

}  // namespace entropy_lab::estimators

#endif  // ENTROPY_LAB_ESTIMATORS_WEIGHTED_FLIPS_H_
