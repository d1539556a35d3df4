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

#include "entropy_lab/datagen/labeled_set.h"

#include <string>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::datagen {

void LabeledSet::Validate(int num_classes) const {
  if (features.rows() != labels.size())
    throw DimensionError("labeled set '" + provenance + "': " +
                         std::to_string(features.rows()) + " rows but " +
                         std::to_string(labels.size()) + " labels");
  for (int y : labels) {
    if (y < kNoLabel || y >= num_classes)
      throw PreconditionError("labeled set '" + provenance + "': label " +
                              std::to_string(y) + " out of range");
  }
}

LabeledSet LabeledSet::Subset(std::span<const std::size_t> indices,
                              std::string tag) const {
  LabeledSet out{features.SelectRows(indices), {}, std::move(tag)};
  out.labels.reserve(indices.size());
  for (std::size_t i : indices) out.labels.push_back(labels[i]);
  return out;
}

LabeledSet LabeledSet::Slice(std::size_t begin, std::size_t end, std::string tag) const {
  if (begin > end || end > size()) throw DimensionError("Slice: bad range");
  std::vector<std::size_t> idx(end - begin);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = begin + i;
  return Subset(idx, std::move(tag));
}

double Accuracy(std::span<const int> predictions, std::span<const int> labels) {
  if (predictions.size() != labels.size())
    throw DimensionError("accuracy: prediction/label count mismatch");
  if (labels.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != kNoLabel && predictions[i] == labels[i]) ++correct;
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

}  // namespace entropy_lab::datagen
