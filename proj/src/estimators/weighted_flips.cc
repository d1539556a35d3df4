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

#include "entropy_lab/estimators/weighted_flips.h"

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::estimators {

double WeightedFlips(const tta::FlipTracker& tracker) {
  const std::vector<bool> flipped = tracker.Flipped();
  double wf = 0.0;
  for (std::size_t i = 0; i < flipped.size(); ++i)
    if (flipped[i]) wf += tracker.percentiles()[i];
  return wf;
}

double UnweightedFlips(const tta::FlipTracker& tracker) {
  return static_cast<double>(tracker.FlipCount());
}

double LimitedScale(double wf_small, std::size_t n_small, std::size_t n_ref) {
  if (n_small == 0) throw PreconditionError("limited_scale: n_small must be positive");
  return wf_small * (static_cast<double>(n_ref) / static_cast<double>(n_small));
}

}  // namespace entropy_lab::estimators
