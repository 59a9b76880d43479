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

#include "ice/core/decomposition.h"

#include <algorithm>

#include "ice/core/errors.h"

namespace ice {

void Decomposition::recompute_residuals() {
  residuals.clear();
  residuals.push_back(prediction);
  for (const Layer& layer : layers) {
    residuals.push_back(set_minus(residuals.back(), layer.requests));
  }
}

void Decomposition::validate(const CoveringInstance& instance) const {
  RequestSet seen;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Layer& layer = layers[i];
    const std::string where = "layer " + std::to_string(i + 1);
    if (!std::is_sorted(layer.requests.begin(), layer.requests.end())) {
      throw ConfigError(where + ": requests not sorted");
    }
    if (intersection_size(seen, layer.requests) != 0) {
      throw ConfigError(where + ": overlaps an earlier layer");
    }
    if (set_minus(layer.requests, prediction).size() != 0) {
      throw ConfigError(where + ": contains requests outside the prediction");
    }
    if (!layer.solution.consistent_with(instance)) {
      throw ConfigError(where + ": solution inconsistent with the instance");
    }
    if (set_minus(layer.requests, layer.solution.covered).size() != 0) {
      throw ConfigError(where + ": solution does not cover its requests");
    }
    seen = set_union(seen, layer.requests);
  }
  if (seen != prediction) throw ConfigError("layers do not partition the prediction");
}

std::vector<int> Decomposition::item_layer_rank(int num_items) const {
  std::vector<int> rank(static_cast<std::size_t>(num_items), INT_MAX);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (ItemIndex item : layers[i].solution.items) {
      int& r = rank[static_cast<std::size_t>(item)];
      r = std::min(r, static_cast<int>(i) + 1);
    }
  }
  return rank;
}

Decomposition empty_decomposition(const RequestSet& prediction) {
  Decomposition d;
  d.prediction = prediction;
  d.recompute_residuals();
  return d;
}

}  // namespace ice
