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

#include "ice/core/online.h"

#include <climits>

#include "ice/core/errors.h"

namespace ice {
namespace {

int rank_of(const TieBreakHint& hint, ItemIndex i) {
  return hint.empty() ? INT_MAX : hint[static_cast<std::size_t>(i)];
}

class CheapestItemAlgorithm : public OnlineAlgorithm {
 public:
  CheapestItemAlgorithm(const CoveringInstance& instance, TieBreakHint hint)
      : instance_(instance),
        hint_(std::move(hint)),
        owned_(static_cast<std::size_t>(instance.num_items()), 0) {}

  StepResult step(RequestId r) override {
    const auto candidates = instance_.items_covering(r);
    if (candidates.empty()) {
      throw InfeasibleError("request " + std::to_string(r) + " is covered by no item");
    }
    for (ItemIndex i : candidates) {
      if (owned_[static_cast<std::size_t>(i)]) return {};
    }
    const ItemIndex best = pick_cheapest(instance_, candidates, hint_);
    owned_[static_cast<std::size_t>(best)] = 1;
    return {{best}, instance_.item_cost(best)};
  }

 private:
  const CoveringInstance& instance_;
  TieBreakHint hint_;
  std::vector<char> owned_;
};

}  // namespace

ItemIndex pick_cheapest(const CoveringInstance& instance,
                        std::span<const ItemIndex> candidates, const TieBreakHint& hint) {
  ItemIndex best = candidates.front();
  for (ItemIndex i : candidates.subspan(1)) {
    const auto& ci = instance.item_cost(i);
    const auto& cb = instance.item_cost(best);
    if (ci < cb || (ci == cb && (rank_of(hint, i) < rank_of(hint, best) ||
                                 (rank_of(hint, i) == rank_of(hint, best) && i < best)))) {
      best = i;
    }
  }
  return best;
}

std::unique_ptr<OnlineAlgorithm> CheapestItemAdapter::create(uint64_t /*seed*/,
                                                             const TieBreakHint& hint) const {
  return std::make_unique<CheapestItemAlgorithm>(instance_, hint);
}

}  // namespace ice
