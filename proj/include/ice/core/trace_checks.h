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

#ifndef ICE_CORE_TRACE_CHECKS_H_
#define ICE_CORE_TRACE_CHECKS_H_

#include <span>
#include <string>

#include "ice/core/ice.h"

namespace ice {

struct CheckResult {
  bool ok = true;
  std::string detail;  // first violation, empty when ok

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

// After every event the purchased union covers every request seen so far.
CheckResult check_prefix_feasibility(const CoveringInstance& instance,
                                     const Decomposition& decomposition,
                                     const IceTrace& trace);

// Replays the excess: accrued ALG- spend minus bought layer costs, never
// negative, below the next layer's cost between arrivals, and each layer
// bought only once the excess reached its cost.
CheckResult check_excess_accounting(const Decomposition& decomposition, const IceTrace& trace);

// k = k_plus + k_minus, layers nondecreasing, total cost adds up.
CheckResult check_counters(const IceTrace& trace);

// For every prefix of i >= 3 bought layers:
//   sum_{j <= i-2} c(S_j) <= 4 (c(S_{i-1}) + c(S_i)).
CheckResult check_layer_cost_growth(const Decomposition& decomposition, const IceTrace& trace);

// cost <= cost(ALG+ alone on the unpredicted arrivals) + 2 * bought layer
// costs + last ALG- incarnation + final excess. ALG+ alone is replayed with
// the seed and hint ice_run would have used.
CheckResult check_robustness(const CoveringInstance& instance, const RequestSet& prediction,
                             const Decomposition& decomposition, const OnlineAdapter& adapter,
                             std::span<const RequestId> arrivals, const IceOptions& options,
                             const IceTrace& trace);

}  // namespace ice

#endif  // ICE_CORE_TRACE_CHECKS_H_
