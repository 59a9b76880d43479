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
#include <sstream>

#include "ice/core/errors.h"
#include "ice/decomp/decomposition_builder.h"

namespace ice {

void write_decomposition(std::ostream& out, const CoveringInstance& instance,
                         const Decomposition& decomposition) {
  for (std::size_t i = 0; i < decomposition.layers.size(); ++i) {
    const Layer& layer = decomposition.layers[i];
    out << "layer " << i + 1 << " cost " << layer.cost().to_string() << " requests";
    for (RequestId r : layer.requests) out << ' ' << r;
    out << " items";
    for (ItemIndex item : layer.solution.items) out << ' ' << instance.item_id(item);
    out << '\n';
  }
}

std::string dump_decomposition(const CoveringInstance& instance,
                               const Decomposition& decomposition) {
  std::ostringstream os;
  write_decomposition(os, instance, decomposition);
  return os.str();
}

Decomposition read_decomposition(std::istream& in, const CoveringInstance& instance) {
  Decomposition d;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream is(line);
    std::string word;
    int index = 0;
    std::string cost_text;
    if (!(is >> word) || word != "layer" || !(is >> index)) {
      throw ParseError(line_no, "expected 'layer <i>'");
    }
    if (index != static_cast<int>(d.layers.size()) + 1) {
      throw ParseError(line_no, "layer " + std::to_string(index) + " out of sequence");
    }
    if (!(is >> word) || word != "cost" || !(is >> cost_text)) {
      throw ParseError(line_no, "expected 'cost <num/den>'");
    }
    Rational cost;
    try {
      cost = Rational::parse(cost_text);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (!(is >> word) || word != "requests") throw ParseError(line_no, "expected 'requests'");
    std::vector<RequestId> requests;
    std::vector<ItemIndex> items;
    bool in_items = false;
    while (is >> word) {
      if (word == "items") {
        if (in_items) throw ParseError(line_no, "repeated 'items'");
        in_items = true;
        continue;
      }
      long long value = 0;
      std::size_t used = 0;
      try {
        value = std::stoll(word, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != word.size()) throw ParseError(line_no, "bad id '" + word + "'");
      if (in_items) {
        auto item = instance.find_item(value);
        if (!item) throw ParseError(line_no, "unknown item " + word);
        items.push_back(*item);
      } else {
        if (value < 1 || value > instance.num_requests()) {
          throw ParseError(line_no, "request " + word + " out of range");
        }
        requests.push_back(static_cast<RequestId>(value));
      }
    }
    if (!in_items) throw ParseError(line_no, "expected 'items'");
    Layer layer;
    layer.requests = make_request_set(std::move(requests));
    layer.solution = PartialSolution::from_items(instance, std::move(items));
    if (layer.solution.cost != cost) {
      throw ParseError(line_no, "cost " + cost.to_short_string() + " but items sum to " +
                                    layer.solution.cost.to_short_string());
    }
    d.prediction = set_union(d.prediction, layer.requests);
    d.layers.push_back(std::move(layer));
  }
  d.recompute_residuals();
  d.oracle_name = "file";
  try {
    d.validate(instance);
  } catch (const ConfigError& e) {
    throw ParseError(line_no, e.what());
  }
  return d;
}

}  // namespace ice
