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

#include "ice/setcover/online.h"

#include <algorithm>
#include <cmath>

#include "ice/core/errors.h"

namespace ice::setcover {

FractionalCover::FractionalCover(const CoveringInstance& instance, uint64_t seed,
                                 TieBreakHint hint)
    : instance_(instance),
      seed_(seed),
      hint_(std::move(hint)),
      x_(static_cast<std::size_t>(instance.num_items()), 0.0),
      bought_(static_cast<std::size_t>(instance.num_items()), 0),
      thresholds_(static_cast<std::size_t>(instance.num_items())),
      streams_(static_cast<std::size_t>(instance.num_items()), Rng(0)),
      stream_ready_(static_cast<std::size_t>(instance.num_items()), 0) {}

int FractionalCover::threshold_count() const {
  return static_cast<int>(std::ceil(2.0 * std::log2(static_cast<double>(k_est_) + 1.0)));
}

double FractionalCover::min_threshold(ItemIndex s, int count) {
  const auto i = static_cast<std::size_t>(s);
  if (!stream_ready_[i]) {
    streams_[i] = Rng(derive_seed(seed_, static_cast<uint64_t>(s)));
    stream_ready_[i] = 1;
  }
  auto& t = thresholds_[i];
  while (static_cast<int>(t.size()) < count) t.push_back(streams_[i].uniform01());
  return *std::min_element(t.begin(), t.begin() + count);
}

StepResult FractionalCover::step(RequestId e) {
  const auto sets = instance_.items_covering(e);
  if (sets.empty()) throw InfeasibleError("element " + std::to_string(e) + " is in no set");
  if (++arrivals_ > k_est_) k_est_ *= 2;

  StepResult result;
  auto buy = [&](ItemIndex s) {
    bought_[static_cast<std::size_t>(s)] = 1;
    result.bought.push_back(s);
    result.cost += instance_.item_cost(s);
  };

  for (ItemIndex s : sets) {
    if (instance_.item_cost(s).is_zero() && !purchased(s)) {
      x_[static_cast<std::size_t>(s)] = std::max(x_[static_cast<std::size_t>(s)], 1.0);
      buy(s);
    }
  }

  auto mass = [&] {
    double sum = 0.0;
    for (ItemIndex s : sets) sum += x_[static_cast<std::size_t>(s)];
    return sum;
  };
  const double d = static_cast<double>(sets.size());
  while (mass() < 1.0) {
    for (ItemIndex s : sets) {
      const double c = instance_.item_cost(s).to_double();
      double& xs = x_[static_cast<std::size_t>(s)];
      const double next = xs * (1.0 + 1.0 / c) + 1.0 / (d * c);
      fractional_cost_ += c * (next - xs);
      xs = next;
    }
  }

  const int count = threshold_count();
  for (ItemIndex s : sets) {
    if (purchased(s)) continue;
    if (x_[static_cast<std::size_t>(s)] > min_threshold(s, count)) buy(s);
  }

  const bool covered =
      std::any_of(sets.begin(), sets.end(), [&](ItemIndex s) { return purchased(s); });
  if (!covered) buy(pick_cheapest(instance_, sets, hint_));
  std::sort(result.bought.begin(), result.bought.end());
  return result;
}

std::unique_ptr<OnlineAlgorithm> FractionalCoverAdapter::create(uint64_t seed,
                                                                const TieBreakHint& hint) const {
  return std::make_unique<FractionalCover>(instance_, seed, hint);
}

}  // namespace ice::setcover
