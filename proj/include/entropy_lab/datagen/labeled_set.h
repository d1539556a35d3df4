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

#ifndef ENTROPY_LAB_DATAGEN_LABELED_SET_H_
#define ENTROPY_LAB_DATAGEN_LABELED_SET_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "entropy_lab/numcore/mat.h"

namespace entropy_lab::datagen {

// Label value for samples that belong to no source class (OOD). Such samples
// always count as misclassified.
inline constexpr int kNoLabel = -1;

struct LabeledSet {
  numcore::Mat features;
  std::vector<int> labels;
  std::string provenance;

  std::size_t size() const { return labels.size(); }
  std::size_t dim() const { return features.cols(); }

  // Throws DimensionError / PreconditionError when rows != labels or a label
  // is outside {-1, 0..num_classes-1}.
  void Validate(int num_classes) const;

  LabeledSet Subset(std::span<const std::size_t> indices, std::string tag) const;
  // Rows [begin, end).
  LabeledSet Slice(std::size_t begin, std::size_t end, std::string tag) const;
};

// Fraction of rows whose prediction equals the label; kNoLabel rows are wrong.
double Accuracy(std::span<const int> predictions, std::span<const int> labels);

}  // namespace entropy_lab::datagen

#endif  // ENTROPY_LAB_DATAGEN_LABELED_SET_H_
