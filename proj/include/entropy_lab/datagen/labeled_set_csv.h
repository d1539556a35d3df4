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

#ifndef ENTROPY_LAB_DATAGEN_LABELED_SET_CSV_H_
#define ENTROPY_LAB_DATAGEN_LABELED_SET_CSV_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "entropy_lab/datagen/labeled_set.h"

namespace entropy_lab::datagen {

// Header `id,label,f0,...,f{d-1}`; one row per sample in set order. Reals use
// the shortest round-trip representation, so Read(Write(s)) == s.
void WriteLabeledSetCsv(const LabeledSet& set, std::ostream& out);
LabeledSet ReadLabeledSetCsv(std::istream& in, std::string provenance);

void SaveLabeledSetCsv(const LabeledSet& set, const std::filesystem::path& path);
LabeledSet LoadLabeledSetCsv(const std::filesystem::path& path);

}  // namespace entropy_lab::datagen

#endif  // ENTROPY_LAB_DATAGEN_LABELED_SET_CSV_H_
