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
#include <map>

#include "ice/core/errors.h"
#include "ice/core/random.h"
#include "ice/wpap/wpap.h"

namespace ice::wpap {
namespace {

struct Piece {
  int a;
  int b;
  int cls;
  std::vector<ItemIndex> provenance;
};

// Outermost already placed piece containing x, if any.
const Piece* outermost(const std::vector<Piece>& placed, int x) {
  const Piece* best = nullptr;
  for (const Piece& p : placed) {
    if (p.a <= x && x <= p.b && (!best || p.b - p.a > best->b - best->a)) best = &p;
  }
  return best;
}

void absorb(std::vector<ItemIndex>& into, const std::vector<ItemIndex>& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace

PartialSolution LaminarInstance::to_original(const WpapInstance& original,
                                             std::span<const ItemIndex> laminar_items) const {
  std::vector<ItemIndex> items;
  for (ItemIndex l : laminar_items) absorb(items, provenance[static_cast<std::size_t>(l)]);
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return PartialSolution::from_items(original, std::move(items));
}

bool is_laminar(const WpapInstance& instance) {
  const auto& links = instance.links();
  for (std::size_t i = 0; i < links.size(); ++i) {
    for (std::size_t j = i + 1; j < links.size(); ++j) {
      const Link& x = links[i];
      const Link& y = links[j];
      const bool disjoint = x.b < y.a || y.b < x.a;
      const bool nested = (x.a <= y.a && y.b <= x.b) || (y.a <= x.a && x.b <= y.b);
      if (!disjoint && !nested) return false;
    }
  }
  return true;
}

bool one_link_per_class(const LaminarInstance& instance) {
  const WpapInstance& lam = instance.laminar;
  for (RequestId e = 1; e <= lam.n(); ++e) {
    std::vector<int> seen;
    for (ItemIndex l : lam.items_covering(e)) seen.push_back(instance.cls[static_cast<std::size_t>(l)]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

LaminarInstance laminarize(const WpapInstance& instance, const Rational& opt_guess,
                           int classes_cap) {
  if (opt_guess <= Rational()) throw DomainError("opt_guess must be positive");
  if (classes_cap < 0) throw DomainError("classes_cap must be nonnegative");
  const Rational floor = opt_guess / rational_pow(4, classes_cap);

  std::vector<char> keep(static_cast<std::size_t>(instance.num_links()), 0);
  for (ItemIndex l = 0; l < instance.num_links(); ++l) {
    if (instance.item_cost(l) <= opt_guess) keep[static_cast<std::size_t>(l)] = 1;
  }
  for (RequestId e = 1; e <= instance.n(); ++e) {
    keep[static_cast<std::size_t>(*instance.cheapest_item_for(e))] = 1;
  }

  std::map<int, std::vector<ItemIndex>> by_class;
  for (ItemIndex l = 0; l < instance.num_links(); ++l) {
    if (!keep[static_cast<std::size_t>(l)]) continue;
    const Rational cost = std::max(instance.item_cost(l), floor);
    by_class[ceil_log(cost, 4)].push_back(l);
  }

  std::vector<Piece> placed;  // finished classes, all cheaper than the current one
  for (auto& [cls, members] : by_class) {
    std::sort(members.begin(), members.end(), [&](ItemIndex x, ItemIndex y) {
      const Link& lx = instance.link(x);
      const Link& ly = instance.link(y);
      return lx.a != ly.a ? lx.a < ly.a : x < y;
    });
    // Chain: from the first uncovered point take the link reaching furthest,
    // then cut each chosen link to start after the previous one.
    std::vector<Piece> chain;
    int reached = 0;
    std::size_t next = 0;
    while (next < members.size()) {
      int x = reached + 1;
      if (instance.link(members[next]).a > x) x = instance.link(members[next]).a;
      ItemIndex pick = -1;
      while (next < members.size() && instance.link(members[next]).a <= x) {
        const ItemIndex l = members[next++];
        if (instance.link(l).b < x) continue;
        if (pick < 0 || instance.link(l).b > instance.link(pick).b) pick = l;
      }
      if (pick < 0) continue;
      const Link& link = instance.link(pick);
      chain.push_back({x, link.b, cls, {pick}});
      reached = link.b;
    }

    std::vector<Piece> finished;
    int last_end = 0;
    for (Piece piece : chain) {
      const ItemIndex origin = piece.provenance.front();
      const Link& link = instance.link(origin);
      const Piece* left = nullptr;
      const Piece* right = nullptr;
      if (const Piece* o = outermost(placed, piece.a); o && o->a < piece.a) {
        left = o;
        piece.a = o->a;
      }
      if (const Piece* o = outermost(placed, piece.b); o && o->b > piece.b) {
        right = o;
        piece.b = o->b;
      }
      piece.a = std::max(piece.a, last_end + 1);
      if (piece.a > piece.b) continue;
      if (left && piece.a < link.a) absorb(piece.provenance, left->provenance);
      if (right && piece.b > link.b) absorb(piece.provenance, right->provenance);
      std::sort(piece.provenance.begin(), piece.provenance.end());
      piece.provenance.erase(std::unique(piece.provenance.begin(), piece.provenance.end()),
                             piece.provenance.end());
      last_end = piece.b;
      finished.push_back(std::move(piece));
    }
    placed.insert(placed.end(), finished.begin(), finished.end());
  }

  LaminarInstance out;
  out.floor = floor;
  std::vector<Link> links;
  for (const Piece& p : placed) {
    links.push_back({static_cast<int64_t>(links.size()) + 1, p.a, p.b, rational_pow(4, p.cls)});
    out.cls.push_back(p.cls);
    out.provenance.push_back(p.provenance);
  }
  out.laminar = WpapInstance(instance.n(), std::move(links));
  return out;
}

}  // namespace ice::wpap
