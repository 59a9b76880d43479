// Copyright 2026 The ICE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICE_CORE_RANDOM_H_
#define ICE_CORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ice {

// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr uint64_t mix_seed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  return mix_seed(mix_seed(seed) ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

// Seeded generator with platform-independent derived distributions
// (the std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(mix_seed(seed)) {}

  uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound > 0.
  uint64_t below(uint64_t bound) {
    // Rejection sampling on the top of the range.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // k distinct values drawn uniformly from `population`, in draw order.
  template <typename T>
  std::vector<T> sample(std::vector<T> population, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(population[i], population[i + below(population.size() - i)]);
    }
    population.resize(k);
    return population;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ice

#endif  // ICE_CORE_RANDOM_H_
