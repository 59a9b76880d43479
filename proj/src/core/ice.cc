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

#include "ice/core/ice.h"

#include <algorithm>
#include <memory>
#include <sstream>

#include "ice/core/errors.h"
#include "ice/core/random.h"

namespace ice {
namespace {

// Per-incarnation bookkeeping used to check the adapter contract.
class Incarnation {
 public:
  Incarnation(const CoveringInstance& instance, std::unique_ptr<OnlineAlgorithm> algorithm)
      : instance_(instance),
        algorithm_(std::move(algorithm)),
        owned_(static_cast<std::size_t>(instance.num_items()), 0) {}

  StepResult serve(RequestId r) {
    StepResult result = algorithm_->step(r);
    Rational expected;
    for (ItemIndex i : result.bought) {
      if (i < 0 || i >= instance_.num_items()) {
        throw ContractViolation("adapter bought unknown item index " + std::to_string(i));
      }
      char& flag = owned_[static_cast<std::size_t>(i)];
      if (flag) {
        throw ContractViolation("adapter re-bought item " +
                                std::to_string(instance_.item_id(i)));
      }
      flag = 1;
      expected += instance_.item_cost(i);
    }
    if (expected != result.cost) {
      throw ContractViolation("adapter reported cost " + result.cost.to_short_string() +
                              " for items costing " + expected.to_short_string());
    }
    bool covered = false;
    for (ItemIndex i : instance_.items_covering(r)) {
      if (owned_[static_cast<std::size_t>(i)]) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw ContractViolation("adapter left request " + std::to_string(r) + " uncovered");
    }
    return result;
  }

 private:
  const CoveringInstance& instance_;
  std::unique_ptr<OnlineAlgorithm> algorithm_;
  std::vector<char> owned_;
};

}  // namespace

int64_t prediction_error(const RequestSet& actual, const RequestSet& predicted) {
  const auto common = static_cast<int64_t>(intersection_size(actual, predicted));
  const auto sym = static_cast<int64_t>(actual.size()) + static_cast<int64_t>(predicted.size()) -
                   2 * common;
  return std::min(static_cast<int64_t>(actual.size()), sym);
}

IceTrace ice_run(const CoveringInstance& instance, const RequestSet& prediction,
                 const Decomposition& decomposition, const OnlineAdapter& adapter,
                 std::span<const RequestId> arrivals, const IceOptions& options) {
  if (decomposition.prediction != prediction) {
    throw ConfigError("decomposition was built for a different prediction");
  }
  decomposition.validate(instance);
  for (RequestId r : prediction) {
    if (r < 1 || r > instance.num_requests()) {
      throw ConfigError("predicted request " + std::to_string(r) + " is out of range");
    }
  }

  const TieBreakHint hint = options.decomposition_tie_break
                                ? decomposition.item_layer_rank(instance.num_items())
                                : TieBreakHint{};
  const int num_layers = static_cast<int>(decomposition.size());

  IceTrace trace;
  std::vector<char> purchased(static_cast<std::size_t>(instance.num_items()), 0);
  std::vector<char> arrived(static_cast<std::size_t>(instance.num_requests()) + 1, 0);
  auto mark_purchased = [&](ItemIndex i) { purchased[static_cast<std::size_t>(i)] = 1; };
  auto globally_covered = [&](RequestId r) {
    for (ItemIndex i : instance.items_covering(r)) {
      if (purchased[static_cast<std::size_t>(i)]) return true;
    }
    return false;
  };

  Incarnation alg_plus(instance, adapter.create(derive_seed(options.seed, kAlgPlusStream), hint));
  int incarnation = 0;
  auto fresh_minus = [&] {
    return std::make_unique<Incarnation>(
        instance, adapter.create(derive_seed(options.seed, kAlgMinusStream + incarnation), hint));
  };
  auto alg_minus = fresh_minus();
  trace.alg_minus_costs.emplace_back();

  Rational excess;
  int layer = 1;

  for (RequestId r : arrivals) {
    if (r < 1 || r > instance.num_requests()) {
      throw ConfigError("arrival " + std::to_string(r) + " is not a request of the instance");
    }
    if (arrived[static_cast<std::size_t>(r)]) {
      throw ConfigError("request " + std::to_string(r) + " arrives twice");
    }
    arrived[static_cast<std::size_t>(r)] = 1;

    IceEvent event;
    event.request = r;
    event.route = contains(prediction, r) ? Route::kMinus : Route::kPlus;
    event.incarnation = incarnation;
    ++trace.k;
    if (event.route == Route::kMinus) {
      ++trace.k_minus;
    } else {
      ++trace.k_plus;
    }

    if (options.skip_covered && globally_covered(r)) {
      event.skipped = true;
    } else if (event.route == Route::kPlus) {
      StepResult step = alg_plus.serve(r);
      for (ItemIndex i : step.bought) mark_purchased(i);
      trace.alg_plus_cost += step.cost;
      event.items_bought = std::move(step.bought);
      event.incremental_cost = step.cost;
    } else {
      StepResult step = alg_minus->serve(r);
      for (ItemIndex i : step.bought) mark_purchased(i);
      trace.alg_minus_costs.back() += step.cost;
      excess += step.cost;
      event.items_bought = std::move(step.bought);
      event.incremental_cost = step.cost;

      // Once the last layer is bought the loop is never entered again.
      while (layer <= num_layers && excess >= decomposition.layer_cost(layer)) {
        const Rational& cost = decomposition.layer_cost(layer);
        trace.layers_bought.push_back(
            {layer, static_cast<int>(trace.events.size()), excess});
        for (ItemIndex i : decomposition.layer(layer).solution.items) mark_purchased(i);
        trace.layers_cost += cost;
        excess -= cost;
        event.layers_bought.push_back(layer);
        ++layer;
      }
      if (!event.layers_bought.empty()) {
        ++incarnation;
        alg_minus = fresh_minus();
        trace.alg_minus_costs.emplace_back();
      }
    }
    event.excess_after = excess;
    event.layer_after = layer;
    trace.events.push_back(std::move(event));
  }

  trace.final_excess = excess;
  trace.total_cost = trace.alg_plus_cost + trace.layers_cost;
  for (const Rational& c : trace.alg_minus_costs) trace.total_cost += c;
  for (ItemIndex i = 0; i < instance.num_items(); ++i) {
    if (purchased[static_cast<std::size_t>(i)]) {
      trace.solution.push_back(i);
      trace.solution_cost += instance.item_cost(i);
    }
  }
  std::vector<RequestId> arrival_set(arrivals.begin(), arrivals.end());
  trace.delta_minus = static_cast<int>(
      set_minus(prediction, make_request_set(std::move(arrival_set))).size());
  return trace;
}

IceTrace run_plain(const CoveringInstance& instance, const OnlineAdapter& adapter,
                   std::span<const RequestId> arrivals, const IceOptions& options) {
  return ice_run(instance, {}, empty_decomposition({}), adapter, arrivals, options);
}

std::string IceTrace::to_text(const CoveringInstance& instance) const {
  std::ostringstream os;
  os << "k " << k << " k_plus " << k_plus << " k_minus " << k_minus << " delta_minus "
     << delta_minus << '\n';
  for (const IceEvent& e : events) {
    os << "event " << e.request << ' ' << (e.route == Route::kPlus ? "ALG+" : "ALG-")
       << (e.skipped ? " skipped" : "") << " inc " << e.incarnation << " items "
       << format_items(instance, e.items_bought) << " cost " << e.incremental_cost
       << " excess " << e.excess_after << " layer " << e.layer_after;
    if (!e.layers_bought.empty()) {
      os << " bought";
      for (int l : e.layers_bought) os << ' ' << l;
    }
    os << '\n';
  }
  os << "total " << total_cost << " alg_plus " << alg_plus_cost << " layers " << layers_cost
     << " excess " << final_excess << " solution " << format_items(instance, solution)
     << " solution_cost " << solution_cost << '\n';
  return os.str();
}

}  // namespace ice
