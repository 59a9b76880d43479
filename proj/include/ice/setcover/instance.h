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

#ifndef ICE_SETCOVER_INSTANCE_H_
#define ICE_SETCOVER_INSTANCE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ice/core/bitset.h"
#include "ice/core/covering.h"

namespace ice::setcover {

// Weighted set system over elements 1..n. Every element lies in some set.
class SetCoverInstance : public CoveringInstance {
 public:
  SetCoverInstance() = default;
  // Throws ice::DomainError on bad members, empty sets or an element that no
  // set covers ("uncoverable element <e>").
  SetCoverInstance(int n_elements, std::vector<Item> sets);

  int n_elements() const { return num_requests(); }
  int n_sets() const { return num_items(); }
  // Membership bitset indexed by element id (bit 0 unused).
  const Bitset& members(ItemIndex s) const { return bits_[static_cast<std::size_t>(s)]; }
  // Bitset over element ids with exactly the given requests set.
  Bitset to_bits(const RequestSet& requests) const;
  bool unit_costs() const { return unit_costs_; }
  bool uniform_costs() const { return uniform_costs_; }

 private:
  std::vector<Bitset> bits_;
  bool unit_costs_ = true;
  bool uniform_costs_ = true;
};

enum class Format { kPace, kJson };
Format parse_format(std::string_view name);  // "pace" | "json"
std::string_view format_name(Format format);

// PACE hitting-set style text: `c` comments, `p hs <n> <m>`, then one line
// of element ids per set. Unit costs; set ids are 1..m in file order.
SetCoverInstance load_pace(std::istream& in);
// {"n": int, "sets": [{"id": int, "cost": "num/den", "members": [int...]}]}
SetCoverInstance load_json(std::istream& in);
// Both throw ice::ParseError carrying the offending line where known.
SetCoverInstance load_instance(std::istream& in, Format format);

// PACE output drops costs; it throws ice::DomainError unless costs are unit.
void dump_pace(std::ostream& out, const SetCoverInstance& instance);
void dump_json(std::ostream& out, const SetCoverInstance& instance);
void dump_instance(std::ostream& out, const SetCoverInstance& instance, Format format);

// m sets, each a uniform s-subset of 1..n, unit costs. Resamples the whole
// instance until every element is covered; throws ice::GenerationError after
// max_attempts draws or when m * s < n.
SetCoverInstance gen_random(uint64_t seed, int n_elements, int n_sets, int set_size,
                            int max_attempts = 10000);

}  // namespace ice::setcover

#endif  // ICE_SETCOVER_INSTANCE_H_
