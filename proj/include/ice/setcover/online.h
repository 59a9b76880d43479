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

#ifndef ICE_SETCOVER_ONLINE_H_
#define ICE_SETCOVER_ONLINE_H_

#include <cstdint>
#include <vector>

#include "ice/core/online.h"
#include "ice/core/random.h"
#include "ice/setcover/instance.h"

namespace ice::setcover {

// Multiplicative-update fractional covering with threshold rounding.
//
// Arrival of e with sum_{S∋e} x_S < 1: repeat
//   x_S <- x_S (1 + 1/c_S) + 1/(d_e c_S)   for all S ∋ e
// until the sum reaches 1 (d_e = number of sets containing e). Zero-cost
// sets are bought outright. Each set owns a stream of uniform thresholds;
// with k_est (doubling as arrivals come in) the first
// ceil(2 log2(k_est + 1)) of them are live and S is bought once x_S exceeds
// the smallest live one. If e is still uncovered the cheapest set covering
// it is bought.
class FractionalCover : public OnlineAlgorithm {
 public:
  FractionalCover(const CoveringInstance& instance, uint64_t seed, TieBreakHint hint);

  StepResult step(RequestId e) override;

  double x(ItemIndex s) const { return x_[static_cast<std::size_t>(s)]; }
  // Sum of c_S * x_S.
  double fractional_cost() const { return fractional_cost_; }
  bool purchased(ItemIndex s) const { return bought_[static_cast<std::size_t>(s)] != 0; }
  int64_t k_estimate() const { return k_est_; }
  int threshold_count() const;

 private:
  double min_threshold(ItemIndex s, int count);

  const CoveringInstance& instance_;
  uint64_t seed_;
  TieBreakHint hint_;
  std::vector<double> x_;
  std::vector<char> bought_;
  std::vector<std::vector<double>> thresholds_;
  std::vector<Rng> streams_;
  std::vector<char> stream_ready_;
  double fractional_cost_ = 0.0;
  int64_t arrivals_ = 0;
  int64_t k_est_ = 1;
};

class FractionalCoverAdapter : public OnlineAdapter {
 public:
  explicit FractionalCoverAdapter(const CoveringInstance& instance) : instance_(instance) {}
  std::unique_ptr<OnlineAlgorithm> create(uint64_t seed,
                                          const TieBreakHint& hint) const override;
  std::string name() const override { return "fractional-cover"; }

 private:
  const CoveringInstance& instance_;
};

}  // namespace ice::setcover

#endif  // ICE_SETCOVER_ONLINE_H_
