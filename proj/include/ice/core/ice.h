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

#ifndef ICE_CORE_ICE_H_
#define ICE_CORE_ICE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ice/core/covering.h"
#include "ice/core/decomposition.h"
#include "ice/core/online.h"

namespace ice {

// |actual| capped symmetric difference: min(|X|, |X \ X^| + |X^ \ X|).
int64_t prediction_error(const RequestSet& actual, const RequestSet& predicted);

enum class Route { kPlus, kMinus };

// Seed streams: ALG+ uses kAlgPlusStream, ALG- incarnation j uses
// kAlgMinusStream + j.
inline constexpr uint64_t kAlgPlusStream = 1;
inline constexpr uint64_t kAlgMinusStream = 1000;

struct IceOptions {
  uint64_t seed = 0;
  // Do not forward requests already covered by purchased items.
  bool skip_covered = false;
  // Hand the decomposition's layer order to the adapters as a tie-break.
  bool decomposition_tie_break = true;
};

struct IceEvent {
  RequestId request = 0;
  Route route = Route::kPlus;
  bool skipped = false;
  int incarnation = 0;               // ALG- incarnation that served it
  std::vector<ItemIndex> items_bought;
  Rational incremental_cost;
  std::vector<int> layers_bought;    // layers purchased right after it
  Rational excess_after;
  int layer_after = 1;
};

struct LayerPurchase {
  int layer = 0;
  int event = 0;                     // index into IceTrace::events
  Rational excess_before;
};

struct IceTrace {
  std::vector<IceEvent> events;
  std::vector<LayerPurchase> layers_bought;

  // ALG+ + every ALG- incarnation + every bought layer (items bought twice
  // are paid twice).
  Rational total_cost;
  Rational alg_plus_cost;
  std::vector<Rational> alg_minus_costs;  // one entry per incarnation
  Rational layers_cost;
  Rational final_excess;

  // Union of everything purchased, each item counted once.
  std::vector<ItemIndex> solution;
  Rational solution_cost;

  int k = 0;
  int k_plus = 0;
  int k_minus = 0;
  int delta_minus = 0;

  // Canonical text dump; identical runs give identical strings.
  std::string to_text(const CoveringInstance& instance) const;
};

// Runs Iteratively-Charge-Expenses. Requests outside the prediction go to
// ALG+. Predicted requests go to ALG-, whose spend accrues as excess; while
// the excess reaches the cost of the next layer, that layer is bought and
// its cost is subtracted, and ALG- restarts once the loop drains.
//
// Throws ice::ConfigError when the decomposition does not partition the
// prediction or arrivals are invalid, ice::ContractViolation when an
// adapter step leaves its request uncovered or misreports its cost.
IceTrace ice_run(const CoveringInstance& instance, const RequestSet& prediction,
                 const Decomposition& decomposition, const OnlineAdapter& adapter,
                 std::span<const RequestId> arrivals, const IceOptions& options = {});

// The adapter alone: ICE with an empty prediction.
IceTrace run_plain(const CoveringInstance& instance, const OnlineAdapter& adapter,
                   std::span<const RequestId> arrivals, const IceOptions& options = {});

}  // namespace ice

#endif  // ICE_CORE_ICE_H_
