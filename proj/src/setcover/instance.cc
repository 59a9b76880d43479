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

#include "ice/setcover/instance.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "ice/core/errors.h"
#include "ice/core/random.h"

namespace ice::setcover {

SetCoverInstance::SetCoverInstance(int n_elements, std::vector<Item> sets)
    : CoveringInstance(n_elements, std::move(sets)) {
  bits_.reserve(static_cast<std::size_t>(num_items()));
  for (ItemIndex s = 0; s < num_items(); ++s) {
    if (item_covers(s).empty()) {
      throw DomainError("set " + std::to_string(item_id(s)) + " is empty");
    }
    Bitset b(static_cast<std::size_t>(n_elements) + 1);
    for (RequestId e : item_covers(s)) b.set(static_cast<std::size_t>(e));
    bits_.push_back(std::move(b));
    if (item_cost(s) != Rational(1)) unit_costs_ = false;
    if (item_cost(s) != item_cost(0)) uniform_costs_ = false;
  }
  const RequestSet missing = uncoverable_requests();
  if (!missing.empty()) {
    throw DomainError("uncoverable element " + std::to_string(missing.front()));
  }
}

Bitset SetCoverInstance::to_bits(const RequestSet& requests) const {
  Bitset b(static_cast<std::size_t>(n_elements()) + 1);
  for (RequestId r : requests) b.set(static_cast<std::size_t>(r));
  return b;
}

Format parse_format(std::string_view name) {
  if (name == "pace") return Format::kPace;
  if (name == "json") return Format::kJson;
  throw ConfigError("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format format) {
  return format == Format::kPace ? "pace" : "json";
}

SetCoverInstance load_pace(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<Item> sets;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream is(line);
    std::string first;
    if (!(is >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (n >= 0) throw ParseError(line_no, "second header line");
      if (!(is >> kind >> n >> m) || kind != "hs" || n < 1 || m < 0) {
        throw ParseError(line_no, "malformed header, expected 'p hs <n> <m>'");
      }
      std::string extra;
      if (is >> extra) throw ParseError(line_no, "trailing text after header");
      continue;
    }
    if (n < 0) throw ParseError(line_no, "set line before the 'p hs' header");
    if (static_cast<int>(sets.size()) == m) throw ParseError(line_no, "more sets than declared");
    Item item;
    item.id = static_cast<int64_t>(sets.size()) + 1;
    item.cost = Rational(1);
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      long long v = 0;
      std::size_t used = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(line_no, "bad element id '" + tok + "'");
      if (v < 1 || v > n) throw ParseError(line_no, "element " + tok + " out of range 1.." + std::to_string(n));
      item.covers.push_back(static_cast<RequestId>(v));
    }
    const std::size_t listed = item.covers.size();
    item.covers = make_request_set(std::move(item.covers));
    if (item.covers.size() != listed) throw ParseError(line_no, "duplicate element in set");
    sets.push_back(std::move(item));
  }
  if (n < 0) throw ParseError(line_no, "missing 'p hs' header");
  if (static_cast<int>(sets.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " sets, found " +
                                  std::to_string(sets.size()));
  }
  try {
    return SetCoverInstance(n, std::move(sets));
  } catch (const DomainError& e) {
    throw ParseError(line_no, e.what());
  }
}

SetCoverInstance load_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset only; report it as the message
    throw ParseError(0, e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    if (n < 1) throw ParseError(0, "n must be positive");
    std::vector<Item> sets;
    for (const auto& s : doc.at("sets")) {
      Item item;
      item.id = s.at("id").get<int64_t>();
      const auto& cost = s.at("cost");
      item.cost = cost.is_string() ? Rational::parse(cost.get<std::string>())
                                   : Rational::parse(cost.dump());
      item.covers = s.at("members").get<std::vector<RequestId>>();
      sets.push_back(std::move(item));
    }
    return SetCoverInstance(n, std::move(sets));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

SetCoverInstance load_instance(std::istream& in, Format format) {
  return format == Format::kPace ? load_pace(in) : load_json(in);
}

void dump_pace(std::ostream& out, const SetCoverInstance& instance) {
  if (!instance.unit_costs()) throw DomainError("PACE output needs unit costs");
  out << "p hs " << instance.n_elements() << ' ' << instance.n_sets() << '\n';
  for (ItemIndex s = 0; s < instance.n_sets(); ++s) {
    const char* sep = "";
    for (RequestId e : instance.item_covers(s)) {
      out << sep << e;
      sep = " ";
    }
    out << '\n';
  }
}

void dump_json(std::ostream& out, const SetCoverInstance& instance) {
  nlohmann::json doc;
  doc["n"] = instance.n_elements();
  nlohmann::json sets = nlohmann::json::array();
  for (ItemIndex s = 0; s < instance.n_sets(); ++s) {
    const auto covers = instance.item_covers(s);
    sets.push_back({{"id", instance.item_id(s)},
                    {"cost", instance.item_cost(s).to_string()},
                    {"members", std::vector<RequestId>(covers.begin(), covers.end())}});
  }
  doc["sets"] = std::move(sets);
  out << doc.dump() << '\n';
}

void dump_instance(std::ostream& out, const SetCoverInstance& instance, Format format) {
  if (format == Format::kPace) {
    dump_pace(out, instance);
  } else {
    dump_json(out, instance);
  }
}

SetCoverInstance gen_random(uint64_t seed, int n_elements, int n_sets, int set_size,
                            int max_attempts) {
  if (n_elements < 1 || n_sets < 1 || set_size < 1 || set_size > n_elements) {
    throw DomainError("need 1 <= set_size <= n_elements and at least one set");
  }
  if (static_cast<int64_t>(n_sets) * set_size < n_elements) {
    throw GenerationError("sets cannot cover every element");
  }
  Rng rng(seed);
  const RequestSet universe = full_request_set(n_elements);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Item> sets;
    std::vector<char> hit(static_cast<std::size_t>(n_elements) + 1, 0);
    int covered = 0;
    for (int s = 0; s < n_sets; ++s) {
      std::vector<RequestId> members = rng.sample(universe, static_cast<std::size_t>(set_size));
      for (RequestId e : members) {
        if (!hit[static_cast<std::size_t>(e)]) {
          hit[static_cast<std::size_t>(e)] = 1;
          ++covered;
        }
      }
      sets.push_back({s + 1, Rational(1), make_request_set(std::move(members))});
    }
    if (covered == n_elements) return SetCoverInstance(n_elements, std::move(sets));
  }
  throw GenerationError("no covering instance after " + std::to_string(max_attempts) +
                        " attempts");
}

}  // namespace ice::setcover
