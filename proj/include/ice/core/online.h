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

#ifndef ICE_CORE_ONLINE_H_
#define ICE_CORE_ONLINE_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ice/core/covering.h"

namespace ice {

// Items bought while serving one request and what they cost.
struct StepResult {
  std::vector<ItemIndex> bought;
  Rational cost;
};

// Preference among cost-tied candidate items: lower rank wins, then lower
// item index. Empty means "lowest index only".
using TieBreakHint = std::vector<int>;

// One incarnation of an online covering algorithm. After step(r) returns,
// r must be covered by the union of everything this incarnation bought.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual StepResult step(RequestId r) = 0;
};

// Factory for fresh incarnations. Incarnations are deterministic given the
// seed and the request history.
class OnlineAdapter {
 public:
  virtual ~OnlineAdapter() = default;
  virtual std::unique_ptr<OnlineAlgorithm> create(uint64_t seed,
                                                  const TieBreakHint& hint) const = 0;
  virtual std::string name() const = 0;
};

// Buys the cheapest item covering an uncovered request; ties by hint rank,
// then lowest index. Knows nothing beyond what each arrival reveals, which
// is the strategy the linear lower bound for unknown links is built on.
class CheapestItemAdapter : public OnlineAdapter {
 public:
  explicit CheapestItemAdapter(const CoveringInstance& instance) : instance_(instance) {}
  std::unique_ptr<OnlineAlgorithm> create(uint64_t seed,
                                          const TieBreakHint& hint) const override;
  std::string name() const override { return "cheapest-item"; }

 private:
  const CoveringInstance& instance_;
};

// Picks the best of `candidates` by (cost, hint rank, index).
ItemIndex pick_cheapest(const CoveringInstance& instance,
                        std::span<const ItemIndex> candidates, const TieBreakHint& hint);

}  // namespace ice

#endif  // ICE_CORE_ONLINE_H_
