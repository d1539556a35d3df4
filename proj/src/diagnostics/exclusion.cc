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

#include "entropy_lab/diagnostics/exclusion.h"

#include <string>
#include <vector>

#include "entropy_lab/nnet/losses.h"
#include "entropy_lab/nnet/train.h"
#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::diagnostics {

namespace {

numcore::Mat FrozenLogits(const datagen::LabeledSet& set, const nnet::Classifier& net) {
  return nnet::PredictBatched(net, set.features, nnet::BnMode::kFrozenStats, 256).logits;
}

std::vector<std::size_t> AllRows(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return all;
}

}  // namespace

datagen::LabeledSet TopKExclusion(const datagen::LabeledSet& set,
                                  const nnet::Classifier& pretrained, int k) {
  if (k < 0) throw PreconditionError("topk_exclusion: k must be >= 0");
  const std::string tag = set.provenance + "/topk" + std::to_string(k);
  if (k == 0 || set.size() == 0) return set.Subset(AllRows(set.size()), tag);
  const numcore::Mat logits = FrozenLogits(set, pretrained);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const int label = set.labels[i];
    if (label < 0) {
      keep.push_back(i);
      continue;
    }
    auto row = logits.row(i);
    const double own = row[static_cast<std::size_t>(label)];
    // Rank of the label: classes strictly above it, ties broken by index.
    int above = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] > own || (row[c] == own && static_cast<int>(c) < label)) ++above;
    }
    if (above >= k) keep.push_back(i);
  }
  return set.Subset(keep, tag);
}

datagen::LabeledSet EntropyExclusion(const datagen::LabeledSet& set,
                                     const nnet::Classifier& pretrained, double threshold) {
  const std::string tag = set.provenance + "/entropy" + numcore::FormatDouble(threshold);
  // Entropy is never negative, so a non-positive threshold removes nothing.
  if (threshold <= 0.0 || set.size() == 0) return set.Subset(AllRows(set.size()), tag);
  std::vector<std::size_t> keep;
  const std::vector<double> h = nnet::RowEntropies(FrozenLogits(set, pretrained));
  for (std::size_t i = 0; i < set.size(); ++i)
    if (h[i] > threshold) keep.push_back(i);
  return set.Subset(keep, tag);
}

}  // namespace entropy_lab::diagnostics
