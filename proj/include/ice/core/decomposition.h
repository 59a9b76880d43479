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

#ifndef ICE_CORE_DECOMPOSITION_H_
#define ICE_CORE_DECOMPOSITION_H_

#include <climits>
#include <string>
#include <vector>

#include "ice/core/covering.h"

namespace ice {

// One layer (X_i, S_i): the predicted requests it accounts for and the
// offline partial solution bought when the online spend reaches its cost.
struct Layer {
  RequestSet requests;
  PartialSolution solution;

  const Rational& cost() const { return solution.cost; }
};

// Diagnostics recorded while a layer is built from its candidate family.
struct LayerConstructionLog {
  int first_index = 0;                  // smallest family index j
  std::vector<Rational> family_costs;   // c(S_{i,j}) after all fixups
  int fixup_passes = 0;
  int chosen_index = 0;                 // j of the selected family member
  int construction_case = 0;            // 0 = first layer, 1 or 2 otherwise
};

// Ordered layers partitioning a prediction. residuals[0] is the prediction
// and residuals[i] = residuals[i-1] \ layers[i-1].requests.
struct Decomposition {
  RequestSet prediction;
  std::vector<Layer> layers;
  std::vector<RequestSet> residuals;
  std::vector<LayerConstructionLog> log;
  std::string oracle_name;

  std::size_t size() const { return layers.size(); }
  bool empty() const { return layers.empty(); }
  // 1-based, matching the usual layer numbering.
  const Layer& layer(int i) const { return layers[static_cast<std::size_t>(i - 1)]; }
  Rational layer_cost(int i) const { return layer(i).cost(); }

  // Rebuilds residuals from the layers.
  void recompute_residuals();

  // Throws ice::ConfigError unless the layers partition the prediction,
  // each S_i covers X_i and is consistent with the instance.
  void validate(const CoveringInstance& instance) const;

  // rank[item] = index of the first layer whose solution contains the item,
  // INT_MAX for items outside every layer.
  std::vector<int> item_layer_rank(int num_items) const;
};

Decomposition empty_decomposition(const RequestSet& prediction = {});

}  // namespace ice

#endif  // ICE_CORE_DECOMPOSITION_H_
