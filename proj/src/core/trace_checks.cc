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

#include "ice/core/trace_checks.h"

#include "ice/core/random.h"

namespace ice {
namespace {

std::string at(std::size_t event) { return "event " + std::to_string(event) + ": "; }

}  // namespace

CheckResult check_prefix_feasibility(const CoveringInstance& instance,
                                     const Decomposition& decomposition,
                                     const IceTrace& trace) {
  std::vector<char> owned(static_cast<std::size_t>(instance.num_items()), 0);
  std::vector<RequestId> seen;
  for (std::size_t e = 0; e < trace.events.size(); ++e) {
    const IceEvent& event = trace.events[e];
    for (ItemIndex i : event.items_bought) owned[static_cast<std::size_t>(i)] = 1;
    for (int l : event.layers_bought) {
      for (ItemIndex i : decomposition.layer(l).solution.items) {
        owned[static_cast<std::size_t>(i)] = 1;
      }
    }
    seen.push_back(event.request);
    for (RequestId r : seen) {
      bool covered = false;
      for (ItemIndex i : instance.items_covering(r)) {
        if (owned[static_cast<std::size_t>(i)]) {
          covered = true;
          break;
        }
      }
      if (!covered) return CheckResult::fail(at(e) + "request " + std::to_string(r) + " uncovered");
    }
  }
  return CheckResult::pass();
}

CheckResult check_excess_accounting(const Decomposition& decomposition, const IceTrace& trace) {
  const int num_layers = static_cast<int>(decomposition.size());
  Rational accrued;
  Rational paid;
  int next = 1;
  std::size_t purchase = 0;
  for (std::size_t e = 0; e < trace.events.size(); ++e) {
    const IceEvent& event = trace.events[e];
    if (event.route == Route::kMinus) accrued += event.incremental_cost;
    for (int l : event.layers_bought) {
      if (l != next) return CheckResult::fail(at(e) + "layer " + std::to_string(l) + " out of order");
      if (purchase >= trace.layers_bought.size() ||
          trace.layers_bought[purchase].layer != l) {
        return CheckResult::fail(at(e) + "purchase log disagrees with events");
      }
      const Rational before = accrued - paid;
      if (trace.layers_bought[purchase].excess_before != before) {
        return CheckResult::fail(at(e) + "logged excess differs from replay");
      }
      if (before < decomposition.layer_cost(l)) {
        return CheckResult::fail(at(e) + "layer " + std::to_string(l) +
                                 " bought with excess " + before.to_short_string());
      }
      paid += decomposition.layer_cost(l);
      ++next;
      ++purchase;
    }
    const Rational excess = accrued - paid;
    if (excess != event.excess_after) {
      return CheckResult::fail(at(e) + "excess " + event.excess_after.to_short_string() +
                               " but replay gives " + excess.to_short_string());
    }
    if (excess < Rational()) return CheckResult::fail(at(e) + "negative excess");
    if (next <= num_layers && excess >= decomposition.layer_cost(next)) {
      return CheckResult::fail(at(e) + "loop stopped with excess reaching layer " +
                               std::to_string(next));
    }
    if (event.layer_after != next) return CheckResult::fail(at(e) + "layer index mismatch");
  }
  if (purchase != trace.layers_bought.size()) {
    return CheckResult::fail("purchase log has extra entries");
  }
  if (trace.final_excess != accrued - paid) return CheckResult::fail("final excess mismatch");
  return CheckResult::pass();
}

CheckResult check_counters(const IceTrace& trace) {
  if (trace.k != trace.k_plus + trace.k_minus) return CheckResult::fail("k != k_plus + k_minus");
  if (trace.k != static_cast<int>(trace.events.size())) {
    return CheckResult::fail("k differs from the number of events");
  }
  int layer = 1;
  for (std::size_t e = 0; e < trace.events.size(); ++e) {
    if (trace.events[e].layer_after < layer) return CheckResult::fail(at(e) + "layer decreased");
    layer = trace.events[e].layer_after;
  }
  Rational total = trace.alg_plus_cost + trace.layers_cost;
  for (const Rational& c : trace.alg_minus_costs) total += c;
  if (total != trace.total_cost) return CheckResult::fail("total cost does not add up");
  return CheckResult::pass();
}

CheckResult check_layer_cost_growth(const Decomposition& decomposition, const IceTrace& trace) {
  const int bought = static_cast<int>(trace.layers_bought.size());
  Rational prefix;  // sum of c(S_j), j <= i-2
  for (int i = 3; i <= bought; ++i) {
    prefix += decomposition.layer_cost(i - 2);
    const Rational bound =
        Rational(4, 1) * (decomposition.layer_cost(i - 1) + decomposition.layer_cost(i));
    if (prefix > bound) {
      return CheckResult::fail("i=" + std::to_string(i) + ": " + prefix.to_short_string() +
                               " > " + bound.to_short_string());
    }
  }
  return CheckResult::pass();
}

CheckResult check_robustness(const CoveringInstance& instance, const RequestSet& prediction,
                             const Decomposition& decomposition, const OnlineAdapter& adapter,
                             std::span<const RequestId> arrivals, const IceOptions& options,
                             const IceTrace& trace) {
  const TieBreakHint hint = options.decomposition_tie_break
                                ? decomposition.item_layer_rank(instance.num_items())
                                : TieBreakHint{};
  auto alone = adapter.create(derive_seed(options.seed, kAlgPlusStream), hint);
  Rational plus_alone;
  for (RequestId r : arrivals) {
    if (!contains(prediction, r)) plus_alone += alone->step(r).cost;
  }
  const Rational bound = plus_alone + Rational(2, 1) * trace.layers_cost +
                         trace.alg_minus_costs.back() + trace.final_excess;
  if (trace.total_cost > bound) {
    return CheckResult::fail("cost " + trace.total_cost.to_short_string() + " exceeds " +
                             bound.to_short_string());
  }
  return CheckResult::pass();
}

}  // namespace ice
