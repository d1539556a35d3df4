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

#ifndef ENTROPY_LAB_DIAGNOSTICS_EXCLUSION_H_
#define ENTROPY_LAB_DIAGNOSTICS_EXCLUSION_H_

#include "entropy_lab/datagen/labeled_set.h"
#include "entropy_lab/nnet/classifier.h"

namespace entropy_lab::diagnostics {

// Drops samples whose label is among the k highest logits of the pretrained
// model (frozen statistics). Unlabelled rows are never in the top-k and are
// kept. k = 0 keeps everything; k >= C drops every labelled row.
datagen::LabeledSet TopKExclusion(const datagen::LabeledSet& set,
                                  const nnet::Classifier& pretrained, int k);

// Drops samples whose initial entropy (frozen statistics) is <= threshold.
datagen::LabeledSet EntropyExclusion(const datagen::LabeledSet& set,
                                     const nnet::Classifier& pretrained, double threshold);

}  // namespace entropy_lab::diagnostics

#endif  // ENTROPY_LAB_DIAGNOSTICS_EXCLUSION_H_
