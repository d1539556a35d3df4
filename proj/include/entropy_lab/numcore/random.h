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

#ifndef ENTROPY_LAB_NUMCORE_RANDOM_H_
#define ENTROPY_LAB_NUMCORE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace entropy_lab::numcore {

// A 64-bit seed. Substreams for a (purpose, run-id) pair are derived by
// hashing, so every consumer draws from its own independent stream.
struct Seed {
  std::uint64_t value = 0;

  Seed Derive(std::string_view purpose, std::uint64_t run_id = 0) const;
  bool operator==(const Seed&) const = default;
};

// Owned by exactly one run; never shared across threads.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  double Uniform();                       // [0, 1)
  double Uniform(double lo, double hi);   // [lo, hi)
  double Normal(double mean = 0.0, double stddev = 1.0);
  std::size_t Index(std::size_t n);       // uniform in [0, n)

  // Fisher-Yates.
  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Index(i)]);
    }
  }

  std::vector<std::size_t> Permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace entropy_lab::numcore

#endif  // ENTROPY_LAB_NUMCORE_RANDOM_H_
