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

#include "ice/core/covering.h"

#include <algorithm>
#include <sstream>

#include "ice/core/errors.h"

namespace ice {

RequestSet make_request_set(std::vector<RequestId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const RequestSet& set, RequestId r) {
  return std::binary_search(set.begin(), set.end(), r);
}

RequestSet set_union(const RequestSet& a, const RequestSet& b) {
  RequestSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RequestSet set_minus(const RequestSet& a, const RequestSet& b) {
  RequestSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RequestSet set_intersection(const RequestSet& a, const RequestSet& b) {
  RequestSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const RequestSet& a, const RequestSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

RequestSet full_request_set(int n) {
  RequestSet out(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

CoveringInstance::CoveringInstance(int num_requests, std::vector<Item> items)
    : num_requests_(num_requests), items_(std::move(items)) {
  if (num_requests_ < 0) throw DomainError("negative number of requests");
  covering_.assign(static_cast<std::size_t>(num_requests_) + 1, {});
  for (std::size_t i = 0; i < items_.size(); ++i) {
    Item& item = items_[i];
    if (item.cost < Rational(0)) {
      throw DomainError("item " + std::to_string(item.id) + " has negative cost");
    }
    std::sort(item.covers.begin(), item.covers.end());
    if (std::adjacent_find(item.covers.begin(), item.covers.end()) != item.covers.end()) {
      throw DomainError("item " + std::to_string(item.id) + " lists a request twice");
    }
    for (RequestId r : item.covers) {
      if (r < 1 || r > num_requests_) {
        throw DomainError("item " + std::to_string(item.id) + " covers out-of-range request " +
                          std::to_string(r));
      }
      covering_[static_cast<std::size_t>(r)].push_back(static_cast<ItemIndex>(i));
    }
    if (!index_of_.emplace(item.id, static_cast<ItemIndex>(i)).second) {
      throw DomainError("duplicate item id " + std::to_string(item.id));
    }
  }
}

bool CoveringInstance::item_covers_request(ItemIndex i, RequestId r) const {
  const auto covers = item_covers(i);
  return std::binary_search(covers.begin(), covers.end(), r);
}

std::optional<ItemIndex> CoveringInstance::find_item(int64_t id) const {
  const auto it = index_of_.find(id);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

RequestSet CoveringInstance::uncoverable_requests() const {
  RequestSet out;
  for (RequestId r = 1; r <= num_requests_; ++r) {
    if (covering_[static_cast<std::size_t>(r)].empty()) out.push_back(r);
  }
  return out;
}

std::optional<ItemIndex> CoveringInstance::cheapest_item_for(RequestId r) const {
  std::optional<ItemIndex> best;
  for (ItemIndex i : items_covering(r)) {
    if (!best || item_cost(i) < item_cost(*best)) best = i;
  }
  return best;
}

Rational CoveringInstance::total_cost() const {
  Rational sum;
  for (const Item& item : items_) sum += item.cost;
  return sum;
}

PartialSolution PartialSolution::from_items(const CoveringInstance& instance,
                                            std::vector<ItemIndex> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  PartialSolution s;
  std::vector<char> seen(static_cast<std::size_t>(instance.num_requests()) + 1, 0);
  for (ItemIndex i : items) {
    s.cost += instance.item_cost(i);
    for (RequestId r : instance.item_covers(i)) seen[static_cast<std::size_t>(r)] = 1;
  }
  for (RequestId r = 1; r <= instance.num_requests(); ++r) {
    if (seen[static_cast<std::size_t>(r)]) s.covered.push_back(r);
  }
  s.items = std::move(items);
  return s;
}

bool PartialSolution::consistent_with(const CoveringInstance& instance) const {
  if (!std::is_sorted(items.begin(), items.end()) ||
      std::adjacent_find(items.begin(), items.end()) != items.end()) {
    return false;
  }
  for (ItemIndex i : items) {
    if (i < 0 || i >= instance.num_items()) return false;
  }
  return *this == from_items(instance, items);
}

PartialSolution merge(const CoveringInstance& instance, const PartialSolution& a,
                      const PartialSolution& b) {
  std::vector<ItemIndex> items = a.items;
  items.insert(items.end(), b.items.begin(), b.items.end());
  return PartialSolution::from_items(instance, std::move(items));
}

std::string format_items(const CoveringInstance& instance,
                         std::span<const ItemIndex> items) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) os << ',';
    os << instance.item_id(items[k]);
  }
  os << '}';
  return os.str();
}

}  // namespace ice
