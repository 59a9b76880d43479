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

#ifndef ICE_CORE_COVERING_H_
#define ICE_CORE_COVERING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ice/core/rational.h"

namespace ice {

// Requests are dense ids 1..N within an instance.
using RequestId = int32_t;
// Items (sets, links) are addressed by their dense position 0..M-1; the
// external id from the input file is kept separately.
using ItemIndex = int32_t;

// Sorted, duplicate-free list of request ids.
using RequestSet = std::vector<RequestId>;

RequestSet make_request_set(std::vector<RequestId> ids);
bool contains(const RequestSet& set, RequestId r);
RequestSet set_union(const RequestSet& a, const RequestSet& b);
RequestSet set_minus(const RequestSet& a, const RequestSet& b);
RequestSet set_intersection(const RequestSet& a, const RequestSet& b);
std::size_t intersection_size(const RequestSet& a, const RequestSet& b);
// {1, ..., n}
RequestSet full_request_set(int n);

struct Item {
  int64_t id = 0;
  Rational cost;
  RequestSet covers;
};

// Ground set of requests 1..N plus a weighted family of items, each covering
// a subset of the requests. Any union of items is a valid (partial)
// solution for the union of what they cover.
class CoveringInstance {
 public:
  CoveringInstance() = default;
  // Validates ids in range, duplicate-free cover lists, nonnegative costs
  // and unique item ids. Throws ice::DomainError.
  CoveringInstance(int num_requests, std::vector<Item> items);
  virtual ~CoveringInstance() = default;

  int num_requests() const { return num_requests_; }
  int num_items() const { return static_cast<int>(items_.size()); }

  const Item& item(ItemIndex i) const { return items_[static_cast<std::size_t>(i)]; }
  const Rational& item_cost(ItemIndex i) const { return item(i).cost; }
  int64_t item_id(ItemIndex i) const { return item(i).id; }
  std::span<const RequestId> item_covers(ItemIndex i) const { return item(i).covers; }
  bool item_covers_request(ItemIndex i, RequestId r) const;
  // Items covering r, in increasing index order.
  std::span<const ItemIndex> items_covering(RequestId r) const {
    return covering_[static_cast<std::size_t>(r)];
  }
  std::optional<ItemIndex> find_item(int64_t id) const;

  // Requests not covered by any item.
  RequestSet uncoverable_requests() const;
  // Cheapest item covering r; ties go to the lowest index. nullopt when r is
  // uncoverable.
  std::optional<ItemIndex> cheapest_item_for(RequestId r) const;

  Rational total_cost() const;

 private:
  int num_requests_ = 0;
  std::vector<Item> items_;
  std::vector<std::vector<ItemIndex>> covering_;
  std::unordered_map<int64_t, ItemIndex> index_of_;
};

// A priced subset of items together with the requests they cover.
struct PartialSolution {
  std::vector<ItemIndex> items;  // sorted, duplicate-free
  RequestSet covered;
  Rational cost;

  static PartialSolution from_items(const CoveringInstance& instance,
                                    std::vector<ItemIndex> items);
  static PartialSolution empty() { return {}; }

  std::size_t num_covered_in(const RequestSet& requests) const {
    return intersection_size(covered, requests);
  }
  bool covers(RequestId r) const { return contains(covered, r); }
  bool consistent_with(const CoveringInstance& instance) const;

  friend bool operator==(const PartialSolution&, const PartialSolution&) = default;
};

PartialSolution merge(const CoveringInstance& instance, const PartialSolution& a,
                      const PartialSolution& b);

std::string format_items(const CoveringInstance& instance,
                         std::span<const ItemIndex> items);

}  // namespace ice

#endif  // ICE_CORE_COVERING_H_
