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

#include "entropy_lab/nnet/serialize.h"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "entropy_lab/numcore/errors.h"

namespace entropy_lab::nnet {
namespace {

constexpr std::array<char, 8> kMagic = {'E', 'L', 'A', 'B', 'N', 'E', 'T', '\0'};

template <typename U>
void PutLE(std::ostream& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    out.put(static_cast<char>((v >> (8 * i)) & 0xff));
  }
}

void PutF64(std::ostream& out, double v) { PutLE(out, std::bit_cast<std::uint64_t>(v)); }

template <typename U>
U GetLE(std::istream& in) {
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw ParseError("classifier file truncated");
    v |= static_cast<U>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

double GetF64(std::istream& in) { return std::bit_cast<double>(GetLE<std::uint64_t>(in)); }

std::vector<double> GetVector(std::istream& in) {
  const auto n = GetLE<std::uint64_t>(in);
  if (n > (1ULL << 32)) throw ParseError("classifier file: implausible buffer size");
  std::vector<double> v(n);
  for (auto& x : v) x = GetF64(in);
  return v;
}

}  // namespace

void WriteClassifier(const Classifier& net, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  PutLE<std::uint32_t>(out, kClassifierFormatVersion);
  PutLE<std::uint32_t>(out, static_cast<std::uint32_t>(net.layers().size()));
  for (const auto& l : net.layers()) {
    PutLE<std::uint8_t>(out, static_cast<std::uint8_t>(l.kind));
    PutLE<std::uint64_t>(out, l.in);
    PutLE<std::uint64_t>(out, l.out);
  }
  PutF64(out, net.bn_epsilon());
  PutLE<std::uint64_t>(out, net.params().size());
  for (double v : net.params()) PutF64(out, v);
  PutLE<std::uint64_t>(out, net.stats().size());
  for (double v : net.stats()) PutF64(out, v);
}

Classifier ReadClassifier(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw ParseError("not a classifier file (bad magic)");
  const auto version = GetLE<std::uint32_t>(in);
  if (version != kClassifierFormatVersion)
    throw ParseError("unsupported classifier format version " + std::to_string(version));
  const auto count = GetLE<std::uint32_t>(in);
  if (count > 4096) throw ParseError("classifier file: implausible layer count");
  std::vector<LayerSpec> layers(count);
  for (auto& l : layers) {
    const auto kind = GetLE<std::uint8_t>(in);
    if (kind < 1 || kind > 3) throw ParseError("classifier file: unknown layer kind");
    l.kind = static_cast<LayerKind>(kind);
    l.in = GetLE<std::uint64_t>(in);
    l.out = GetLE<std::uint64_t>(in);
  }
  const double eps = GetF64(in);
  auto params = GetVector(in);
  auto stats = GetVector(in);
  try {
    return Classifier::FromBuffers(std::move(layers), eps, std::move(params),
                                   std::move(stats));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("classifier file: ") + e.what());
  }
}

void SaveClassifier(const Classifier& net, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path.string());
  WriteClassifier(net, out);
}

Classifier LoadClassifier(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("missing model file " + path.string());
  return ReadClassifier(in);
}

}  // namespace entropy_lab::nnet
