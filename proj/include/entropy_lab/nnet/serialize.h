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

#ifndef ENTROPY_LAB_NNET_SERIALIZE_H_
#define ENTROPY_LAB_NNET_SERIALIZE_H_

#include <filesystem>
#include <iosfwd>

#include "entropy_lab/nnet/classifier.h"

namespace entropy_lab::nnet {

// Binary layout, all integers and reals little-endian:
//   "ELABNET\0"  magic (8 bytes)
//   u32          format version (1)
//   u32          layer count L
//   L x { u8 kind, u64 in, u64 out }
//   f64          BatchNorm epsilon
//   u64 P, P x f64   parameters in layer order
//   u64 S, S x f64   BatchNorm population statistics
inline constexpr std::uint32_t kClassifierFormatVersion = 1;

void WriteClassifier(const Classifier& net, std::ostream& out);
Classifier ReadClassifier(std::istream& in);

void SaveClassifier(const Classifier& net, const std::filesystem::path& path);
// Throws PreconditionError if the file is missing, ParseError if malformed.
Classifier LoadClassifier(const std::filesystem::path& path);

}  // namespace entropy_lab::nnet

#endif  // ENTROPY_LAB_NNET_SERIALIZE_H_
