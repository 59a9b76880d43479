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

#ifndef ICE_TESTS_SUPPORT_H_
#define ICE_TESTS_SUPPORT_H_

// Test-side reference implementations. Everything here is deliberately
// naive and shares no code with the library beyond the instance types.

#include <cstdint>
#include <span>
#include <vector>

#include "ice/core/covering.h"
#include "ice/core/decomposition.h"
#include "ice/core/online.h"
#include "ice/setcover/instance.h"
#include "ice/wpap/wpap.h"

namespace ice::testing {

// Minimum cost over all item subsets covering >= i requests of `residual`.
// Also reports one optimal subset (lowest mask among optima).
struct BruteForce {
  Rational cost;
  std::vector<ItemIndex> items;
};
BruteForce brute_partial_cover(const CoveringInstance& instance, const RequestSet& residual,
                               int i);
// Minimum cost covering every request in `required`.
Rational brute_cover(const CoveringInstance& instance, const RequestSet& required);

// Random weighted set system: costs drawn from {1/2, 1, 3/2, 2, 3, 5}.
setcover::SetCoverInstance random_weighted(uint64_t seed, int n, int m, int max_size);
// Random links on a path of n elements, costs q/4 for q in 1..16.
wpap::WpapInstance random_path(uint64_t seed, int n, int m);
// Random subset of 1..n with each element kept with probability p.
RequestSet random_subset(uint64_t seed, int n, double p);

// Straight transcription of the charging loop: returns the total charged
// cost and the layers bought, given the adapter and the seed convention
// (ALG+ on stream 1, ALG- incarnation j on stream 1000 + j).
struct ReferenceRun {
  Rational total;
  std::vector<int> layers;
  std::vector<Rational> excess_after;
};
ReferenceRun reference_ice(const CoveringInstance& instance, const Decomposition& d,
                           const OnlineAdapter& adapter, std::span<const RequestId> arrivals,
                           uint64_t seed, bool skip_covered);

// Interval laminarity by pairwise comparison.
bool pairwise_laminar(const wpap::WpapInstance& instance);

// The four-element example: A={1,2,3} c=1, B={3,4} c=1, C={4} c=1/2.
setcover::SetCoverInstance scb();
// Path of four elements: L1=[1,2] c=1, L2=[3,4] c=1, L3=[1,4] c=3/2,
// L4=[2,3] c=4/5.
wpap::WpapInstance w1();

}  // namespace ice::testing

#endif  // ICE_TESTS_SUPPORT_H_
