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

#include "support.h"

#include <algorithm>
#include <map>

#include "ice/core/random.h"

namespace ice::testing {

BruteForce brute_partial_cover(const CoveringInstance& instance, const RequestSet& residual,
                               int i) {
  const int m = instance.num_items();
  BruteForce best;
  bool found = false;
  std::vector<char> hit(static_cast<std::size_t>(instance.num_requests()) + 1);
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    Rational cost;
    std::fill(hit.begin(), hit.end(), 0);
    for (int s = 0; s < m; ++s) {
      if (!((mask >> s) & 1)) continue;
      cost += instance.item_cost(s);
      for (RequestId r : instance.item_covers(s)) hit[static_cast<std::size_t>(r)] = 1;
    }
    if (found && !(cost < best.cost)) continue;
    int count = 0;
    for (RequestId r : residual) count += hit[static_cast<std::size_t>(r)];
    if (count < i) continue;
    found = true;
    best.cost = cost;
    best.items.clear();
    for (int s = 0; s < m; ++s) {
      if ((mask >> s) & 1) best.items.push_back(s);
    }
  }
  return best;
}

Rational brute_cover(const CoveringInstance& instance, const RequestSet& required) {
  return brute_partial_cover(instance, required, static_cast<int>(required.size())).cost;
}

setcover::SetCoverInstance random_weighted(uint64_t seed, int n, int m, int max_size) {
  static const Rational kCosts[] = {Rational(1, 2), Rational(1), Rational(3, 2),
                                    Rational(2),    Rational(3), Rational(5)};
  Rng rng(seed);
  for (;;) {
    std::vector<Item> sets;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int s = 0; s < m; ++s) {
      const int size = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_size)));
      std::vector<RequestId> all;
      for (int e = 1; e <= n; ++e) all.push_back(e);
      auto members = rng.sample(all, static_cast<std::size_t>(std::min(size, n)));
      for (RequestId e : members) seen[static_cast<std::size_t>(e)] = 1;
      sets.push_back({s + 1, kCosts[rng.below(6)], make_request_set(members)});
    }
    if (std::count(seen.begin() + 1, seen.end(), 1) == n) {
      return setcover::SetCoverInstance(n, std::move(sets));
    }
  }
}

wpap::WpapInstance random_path(uint64_t seed, int n, int m) {
  Rng rng(seed);
  std::vector<wpap::Link> links;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int l = 0; l < m; ++l) {
    int a = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    int b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    if (a > b) std::swap(a, b);
    for (int e = a; e <= b; ++e) seen[static_cast<std::size_t>(e)] = 1;
    links.push_back({l + 1, a, b, Rational(1 + static_cast<int64_t>(rng.below(16)), 4)});
  }
  for (int e = 1; e <= n; ++e) {
    if (!seen[static_cast<std::size_t>(e)]) {
      links.push_back({static_cast<int64_t>(links.size()) + 1, e, e, Rational(2)});
    }
  }
  return wpap::WpapInstance(n, std::move(links));
}

RequestSet random_subset(uint64_t seed, int n, double p) {
  Rng rng(seed);
  RequestSet out;
  for (int e = 1; e <= n; ++e) {
    if (rng.uniform01() < p) out.push_back(e);
  }
  return out;
}

ReferenceRun reference_ice(const CoveringInstance& instance, const Decomposition& d,
                           const OnlineAdapter& adapter, std::span<const RequestId> arrivals,
                           uint64_t seed, bool skip_covered) {
  const TieBreakHint hint = d.item_layer_rank(instance.num_items());
  auto plus = adapter.create(derive_seed(seed, 1), hint);
  int incarnation = 0;
  auto minus = adapter.create(derive_seed(seed, 1000), hint);
  std::map<ItemIndex, bool> owned;
  ReferenceRun run;
  Rational excess;
  std::size_t next = 0;  // 0-based index of the next layer
  for (RequestId r : arrivals) {
    bool covered = false;
    for (ItemIndex i : instance.items_covering(r)) covered = covered || owned.count(i);
    if (skip_covered && covered) {
      run.excess_after.push_back(excess);
      continue;
    }
    if (!std::binary_search(d.prediction.begin(), d.prediction.end(), r)) {
      const StepResult s = plus->step(r);
      run.total += s.cost;
      for (ItemIndex i : s.bought) owned[i] = true;
      run.excess_after.push_back(excess);
      continue;
    }
    const StepResult s = minus->step(r);
    run.total += s.cost;
    excess += s.cost;
    for (ItemIndex i : s.bought) owned[i] = true;
    bool bought = false;
    while (next < d.layers.size() && !(excess < d.layers[next].cost())) {
      run.total += d.layers[next].cost();
      excess -= d.layers[next].cost();
      for (ItemIndex i : d.layers[next].solution.items) owned[i] = true;
      run.layers.push_back(static_cast<int>(next) + 1);
      ++next;
      bought = true;
    }
    if (bought) {
      ++incarnation;
      minus = adapter.create(derive_seed(seed, 1000 + static_cast<uint64_t>(incarnation)), hint);
    }
    run.excess_after.push_back(excess);
  }
  return run;
}

bool pairwise_laminar(const wpap::WpapInstance& instance) {
  const auto& links = instance.links();
  for (std::size_t p = 0; p < links.size(); ++p) {
    for (std::size_t q = p + 1; q < links.size(); ++q) {
      const auto& x = links[p];
      const auto& y = links[q];
      const bool disjoint = x.b < y.a || y.b < x.a;
      const bool nested = (x.a <= y.a && y.b <= x.b) || (y.a <= x.a && x.b <= y.b);
      if (!disjoint && !nested) return false;
    }
  }
  return true;
}

setcover::SetCoverInstance scb() {
  return setcover::SetCoverInstance(4, {{1, Rational(1), {1, 2, 3}},
                                        {2, Rational(1), {3, 4}},
                                        {3, Rational(1, 2), {4}}});
}

wpap::WpapInstance w1() {
  return wpap::WpapInstance(4, {{1, 1, 2, Rational(1)},
                                {2, 3, 4, Rational(1)},
                                {3, 1, 4, Rational(3, 2)},
                                {4, 2, 3, Rational(4, 5)}});
}

}  // namespace ice::testing
