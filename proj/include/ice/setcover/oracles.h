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

#ifndef ICE_SETCOVER_ORACLES_H_
#define ICE_SETCOVER_ORACLES_H_

#include <cstdint>

#include "ice/core/errors.h"
#include "ice/decomp/decomposition_builder.h"
#include "ice/setcover/instance.h"

namespace ice::setcover {

enum class BmcVariant {
  kPlain,    // ratio greedy, compared against the best single set
  kSeeded3,  // every seed of at most three sets, completed greedily
  kAuto,     // seeded3 up to kSeeded3MaxSets sets, plain above
};

inline constexpr int kSeeded3MaxSets = 40;
BmcVariant resolve_variant(const SetCoverInstance& instance, BmcVariant variant);

// Budgeted maximum coverage over `residual`: cost <= budget, as many residual
// elements as possible. Ratio ties go to the lower set index; between
// candidate solutions the one covering more wins, then the cheaper one.
PartialSolution bmc_greedy(const SetCoverInstance& instance, const RequestSet& residual,
                           const Rational& budget, BmcVariant variant = BmcVariant::kSeeded3);

// Smallest budget on the grid of multiples of the cost gcd for which
// bmc_greedy covers ceil((1 - 1/e) i) residual elements; returns that
// solution. Its cost is at most the cheapest way to cover i elements.
// Throws ice::DomainError unless 1 <= i <= |residual|.
PartialSolution partial_cover_oracle(const SetCoverInstance& instance,
                                     const RequestSet& residual, int i,
                                     BmcVariant variant = BmcVariant::kAuto);

// The branch-and-bound ran out of nodes. incumbent() is the best solution
// found, lower_bound() the best proven bound on the optimum.
class NodeLimitError : public Error {
 public:
  NodeLimitError(PartialSolution incumbent, Rational lower_bound)
      : Error("node limit reached: incumbent " + incumbent.cost.to_short_string() +
              ", lower bound " + lower_bound.to_short_string()),
        incumbent_(std::move(incumbent)),
        lower_bound_(lower_bound) {}
  const PartialSolution& incumbent() const { return incumbent_; }
  const Rational& lower_bound() const { return lower_bound_; }

 private:
  PartialSolution incumbent_;
  Rational lower_bound_;
};

struct ExactOptions {
  int64_t node_limit = 5'000'000;
};

// Minimum-cost solution covering at least i elements of `residual`, by
// branch-and-bound on elements (cover it with one of its sets, or give it
// up) with a fractional knapsack bound. i = 0 gives the empty solution.
PartialSolution exact_partial_cover(const SetCoverInstance& instance,
                                    const RequestSet& residual, int i,
                                    const ExactOptions& options = {});

// Offline ratio greedy covering every request in `requests`.
PartialSolution greedy_cover(const SetCoverInstance& instance, const RequestSet& requests);

// Lower bound on the cheapest cover of i elements of `residual` from the
// root relaxations alone; no branching.
Rational exact_lower_bound(const SetCoverInstance& instance, const RequestSet& residual, int i);

// Oracle specs for the decomposition builder.
OracleSpec exact_oracle_spec(const SetCoverInstance& instance, const ExactOptions& options = {});
OracleSpec bmc_oracle_spec(const SetCoverInstance& instance,
                           BmcVariant variant = BmcVariant::kAuto);

}  // namespace ice::setcover

#endif  // ICE_SETCOVER_ORACLES_H_
