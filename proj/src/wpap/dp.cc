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

#include <algorithm>

#include "ice/core/errors.h"
#include "ice/wpap/wpap.h"

namespace ice::wpap {
namespace {

// Shortest paths from position j over links with a >= j: a link [a, b]
// leads from any x in [a, b] to b + 1. A path ending at q + 1 only uses
// links with b <= q, so dist[q + 1] is the cheapest cover of j..q inside
// [j, q].
struct Sweep {
  int origin = 1;
  std::vector<std::optional<Rational>> dist;  // index x - origin, x in [j, n+1]
  std::vector<ItemIndex> via;
  std::vector<int> from;

  std::optional<Rational> cost_to(int q) const {
    return dist[static_cast<std::size_t>(q + 1 - origin)];
  }

  std::vector<ItemIndex> links_to(int q) const {
    std::vector<ItemIndex> out;
    for (int x = q + 1; x != origin;) {
      const auto i = static_cast<std::size_t>(x - origin);
      out.push_back(via[i]);
      x = from[i];
    }
    return out;
  }
};

Sweep sweep_from(const WpapInstance& instance, int j) {
  const int n = instance.n();
  Sweep s;
  s.origin = j;
  const auto size = static_cast<std::size_t>(n + 2 - j);
  s.dist.assign(size, std::nullopt);
  s.via.assign(size, -1);
  s.from.assign(size, -1);
  s.dist[0] = Rational();
  for (int x = j; x <= n; ++x) {
    const auto& here = s.dist[static_cast<std::size_t>(x - j)];
    if (!here) continue;
    for (ItemIndex l : instance.items_covering(x)) {
      const Link& link = instance.link(l);
      if (link.a < j) continue;
      const auto to = static_cast<std::size_t>(link.b + 1 - j);
      const Rational cand = *here + link.cost;
      if (!s.dist[to] || cand < *s.dist[to]) {
        s.dist[to] = cand;
        s.via[to] = l;
        s.from[to] = x;
      }
    }
  }
  return s;
}

}  // namespace

std::optional<PartialSolution> interval_cover_cost(const WpapInstance& instance, int j, int k) {
  if (k < j) return PartialSolution{};
  if (j < 1 || k > instance.n()) throw DomainError("interval outside the path");
  const Sweep s = sweep_from(instance, j);
  if (!s.cost_to(k)) return std::nullopt;
  return PartialSolution::from_items(instance, s.links_to(k));
}

PartialSolution dp_partial_cover(const WpapInstance& instance, int i) {
  return dp_partial_cover(instance, full_request_set(instance.n()), i);
}

PartialSolution dp_partial_cover(const WpapInstance& instance, const RequestSet& residual,
                                 int i) {
  if (i < 0 || i > static_cast<int>(residual.size())) {
    throw DomainError("cover target " + std::to_string(i) + " outside 0.." +
                      std::to_string(residual.size()));
  }
  if (i == 0) return {};
  const int n = instance.n();
  std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (RequestId r : residual) {
    if (r < 1 || r > n) throw DomainError("residual element outside the path");
    prefix[static_cast<std::size_t>(r)] = 1;
  }
  for (int p = 1; p <= n; ++p) prefix[static_cast<std::size_t>(p)] += prefix[static_cast<std::size_t>(p - 1)];
  auto count = [&](int p, int q) {
    return prefix[static_cast<std::size_t>(q)] - prefix[static_cast<std::size_t>(p - 1)];
  };

  std::vector<Sweep> sweeps;
  sweeps.reserve(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) sweeps.push_back(sweep_from(instance, p));

  // best[p][c]: cheapest way to cover c more residual elements with blocks
  // inside [p, n]; choice -1 skips p, otherwise the block [p, choice].
  const auto width = static_cast<std::size_t>(i) + 1;
  std::vector<std::vector<std::optional<Rational>>> best(
      static_cast<std::size_t>(n) + 3, std::vector<std::optional<Rational>>(width));
  std::vector<std::vector<int>> choice(static_cast<std::size_t>(n) + 3,
                                       std::vector<int>(width, -1));
  for (auto& row : best) row[0] = Rational();
  for (int p = n; p >= 1; --p) {
    const auto pp = static_cast<std::size_t>(p);
    const Sweep& sw = sweeps[pp - 1];
    for (int c = 1; c <= i; ++c) {
      const auto cc = static_cast<std::size_t>(c);
      best[pp][cc] = best[pp + 1][cc];
      for (int q = p; q <= n; ++q) {
        const auto block = sw.cost_to(q);
        if (!block) continue;
        const auto rest = best[static_cast<std::size_t>(q) + 2]
                              [static_cast<std::size_t>(std::max(0, c - count(p, q)))];
        if (!rest) continue;
        const Rational cand = *block + *rest;
        if (!best[pp][cc] || cand < *best[pp][cc]) {
          best[pp][cc] = cand;
          choice[pp][cc] = q;
        }
      }
    }
  }
  if (!best[1][width - 1]) throw InfeasibleError("residual cannot reach the cover target");

  std::vector<ItemIndex> items;
  int p = 1;
  int c = i;
  while (c > 0 && p <= n) {
    const int q = choice[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
    if (q < 0) {
      ++p;
      continue;
    }
    for (ItemIndex l : sweeps[static_cast<std::size_t>(p) - 1].links_to(q)) items.push_back(l);
    c = std::max(0, c - count(p, q));
    p = q + 2;
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return PartialSolution::from_items(instance, std::move(items));
}

PartialSolution exact_cover_subset(const WpapInstance& instance, const RequestSet& required) {
  const std::size_t t = required.size();
  std::vector<std::optional<Rational>> dist(t + 1);
  std::vector<ItemIndex> via(t + 1, -1);
  std::vector<std::size_t> from(t + 1, 0);
  dist[0] = Rational();
  for (std::size_t s = 0; s < t; ++s) {
    if (!dist[s]) continue;
    const RequestId r = required[s];
    if (r < 1 || r > instance.n()) throw DomainError("required element outside the path");
    const auto links = instance.items_covering(r);
    if (links.empty()) throw InfeasibleError("element " + std::to_string(r) + " is in no link");
    for (ItemIndex l : links) {
      const Link& link = instance.link(l);
      const auto next = static_cast<std::size_t>(
          std::upper_bound(required.begin(), required.end(), link.b) - required.begin());
      const Rational cand = *dist[s] + link.cost;
      if (!dist[next] || cand < *dist[next]) {
        dist[next] = cand;
        via[next] = l;
        from[next] = s;
      }
    }
  }
  std::vector<ItemIndex> items;
  for (std::size_t s = t; s != 0; s = from[s]) items.push_back(via[s]);
  std::sort(items.begin(), items.end());
  return PartialSolution::from_items(instance, std::move(items));
}

OracleSpec dp_oracle_spec(const WpapInstance& instance) {
  OracleSpec spec;
  spec.name = "dp";
  spec.alpha = Rational(1);
  spec.gamma = 1.0;
  spec.oracle = [&instance](const RequestSet& residual, int i) {
    return dp_partial_cover(instance, residual, i);
  };
  return spec;
}

}  // namespace ice::wpap
