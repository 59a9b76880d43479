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

#include <map>

#include "ice/bench/bench.h"
#include "ice/core/errors.h"
#include "ice/core/random.h"

namespace ice::bench {

PredictionSplit make_prediction(const CoveringInstance& instance, uint64_t seed,
                                const Rational& fraction) {
  if (fraction < Rational() || fraction > Rational(1)) {
    throw DomainError("prediction fraction must lie in [0, 1]");
  }
  const RequestSet all = full_request_set(instance.num_requests());
  const auto k = static_cast<std::size_t>((fraction * Rational(instance.num_requests())).floor());
  Rng rng(seed);
  PredictionSplit split;
  split.predicted = make_request_set(rng.sample(all, k));
  split.pool = set_minus(all, split.predicted);
  return split;
}

ArrivalSet perturb(const RequestSet& predicted, const RequestSet& pool, const Rational& alpha,
                   uint64_t seed) {
  if (alpha < Rational() || alpha > Rational(1)) throw DomainError("alpha must lie in [0, 1]");
  const auto m =
      static_cast<std::size_t>((alpha * Rational(static_cast<int64_t>(predicted.size()))).floor());
  if (m > pool.size()) {
    throw ConfigError("pool of " + std::to_string(pool.size()) + " cannot supply " +
                      std::to_string(m) + " replacements");
  }
  Rng rng(seed);
  const RequestSet removed = make_request_set(rng.sample(predicted, m));
  const RequestSet added = make_request_set(rng.sample(pool, m));
  ArrivalSet out;
  out.actual = set_union(set_minus(predicted, removed), added);
  out.order = out.actual;
  rng.shuffle(out.order);
  return out;
}

RequestSet majority_predictor(const std::vector<RequestSet>& samples) {
  std::map<RequestId, std::size_t> votes;
  for (const RequestSet& s : samples) {
    for (RequestId r : s) ++votes[r];
  }
  RequestSet out;
  for (const auto& [r, n] : votes) {
    if (2 * n > samples.size()) out.push_back(r);
  }
  return out;
}

}  // namespace ice::bench
