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

#include <istream>
#include <ostream>

#include "ice/core/errors.h"
#include "ice/core/random.h"
#include "ice/wpap/wpap.h"
#include "json.hpp"

namespace ice::wpap {
namespace {

std::vector<Item> to_items(int n, const std::vector<Link>& links) {
  std::vector<Item> items;
  items.reserve(links.size());
  for (const Link& l : links) {
    if (l.a < 1 || l.b < l.a || l.b > n) {
      throw DomainError("link " + std::to_string(l.id) + " has bad interval [" +
                        std::to_string(l.a) + "," + std::to_string(l.b) + "]");
    }
    Item item;
    item.id = l.id;
    item.cost = l.cost;
    for (int e = l.a; e <= l.b; ++e) item.covers.push_back(e);
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace

WpapInstance::WpapInstance(int n, std::vector<Link> links)
    : CoveringInstance(n, to_items(n, links)), links_(std::move(links)) {
  const RequestSet missing = uncoverable_requests();
  if (!missing.empty()) {
    throw DomainError("uncoverable element " + std::to_string(missing.front()));
  }
}

WpapInstance load_json(std::istream& in) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    const int n = doc.at("n").get<int>();
    if (n < 1) throw ParseError(0, "n must be positive");
    std::vector<Link> links;
    for (const auto& l : doc.at("links")) {
      const auto& cost = l.at("cost");
      links.push_back({l.at("id").get<int64_t>(), l.at("a").get<int>(), l.at("b").get<int>(),
                       cost.is_string() ? Rational::parse(cost.get<std::string>())
                                        : Rational::parse(cost.dump())});
    }
    return WpapInstance(n, std::move(links));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

void dump_json(std::ostream& out, const WpapInstance& instance) {
  nlohmann::json links = nlohmann::json::array();
  for (const Link& l : instance.links()) {
    links.push_back({{"id", l.id}, {"a", l.a}, {"b", l.b}, {"cost", l.cost.to_string()}});
  }
  nlohmann::json doc;
  doc["n"] = instance.n();
  doc["links"] = std::move(links);
  out << doc.dump() << '\n';
}

WpapInstance gen_parking_permit(int k, const std::vector<int>& durations,
                                const std::vector<Rational>& costs, int horizon) {
  if (k < 1 || static_cast<int>(durations.size()) != k || static_cast<int>(costs.size()) != k) {
    throw DomainError("need k durations and k costs");
  }
  if (horizon < 1) throw DomainError("horizon must be positive");
  std::vector<Link> links;
  for (int t = 0; t < k; ++t) {
    const int d = durations[static_cast<std::size_t>(t)];
    if (d < 1 || d > horizon) {
      throw DomainError("duration " + std::to_string(d) + " outside 1.." + std::to_string(horizon));
    }
    for (int start = 1; start <= horizon; start += d) {
      links.push_back({static_cast<int64_t>(links.size()) + 1, start,
                       std::min(start + d - 1, horizon), costs[static_cast<std::size_t>(t)]});
    }
  }
  return WpapInstance(horizon, std::move(links));
}

AdversarialCase gen_adversarial(int k) {
  if (k < 1) throw DomainError("k must be positive");
  std::vector<Link> links;
  std::vector<RequestId> arrivals;
  for (int i = 1; i <= k; ++i) {
    links.push_back({i, 1, i, Rational(1)});
    arrivals.push_back(i);
  }
  return {WpapInstance(k, std::move(links)), std::move(arrivals)};
}

WpapInstance gen_random_links(uint64_t seed, int n, int m, int max_cost) {
  if (n < 1 || m < 0 || max_cost < 1) throw DomainError("bad random link parameters");
  Rng rng(seed);
  std::vector<Link> links;
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < m; ++i) {
    int a = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    int b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    if (a > b) std::swap(a, b);
    const auto q = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(4 * max_cost)));
    links.push_back({static_cast<int64_t>(links.size()) + 1, a, b, Rational(q, 4)});
    for (int e = a; e <= b; ++e) hit[static_cast<std::size_t>(e)] = 1;
  }
  for (int e = 1; e <= n; ++e) {
    if (hit[static_cast<std::size_t>(e)]) continue;
    const auto q = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(4 * max_cost)));
    links.push_back({static_cast<int64_t>(links.size()) + 1, e, e, Rational(q, 4)});
  }
  return WpapInstance(n, std::move(links));
}

}  // namespace ice::wpap
