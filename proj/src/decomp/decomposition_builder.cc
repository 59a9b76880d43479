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

#include "ice/decomp/decomposition_builder.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ice/core/errors.h"

namespace ice {
namespace {

int needed_per_call(int h, double gamma) {
  if (gamma == 1.0) return h;
  return static_cast<int>(std::ceil(static_cast<double>(h) / gamma - 1e-12));
}

int ceil_half(std::size_t n) { return static_cast<int>((n + 1) / 2); }

struct Candidate {
  PartialSolution solution;
  RequestSet covered;  // solution.covered restricted to the residual
};

// Cheapest single item covering each residual request, lowest index on ties.
std::vector<ItemIndex> cheapest_items(const CoveringInstance& instance,
                                      const RequestSet& residual) {
  std::vector<ItemIndex> out;
  out.reserve(residual.size());
  for (RequestId r : residual) {
    auto best = instance.cheapest_item_for(r);
    if (!best) throw InfeasibleError("request " + std::to_string(r) + " is covered by no item");
    out.push_back(*best);
  }
  return out;
}

Candidate make_candidate(PartialSolution s, const RequestSet& residual) {
  RequestSet covered = set_intersection(s.covered, residual);
  return {std::move(s), std::move(covered)};
}

// Applies the copy-down pass and then the over-coverage / single-element
// fixups until none applies. family[k] holds S_{first + k}.
int fix_family(const CoveringInstance& instance, const RequestSet& residual, int first,
               std::vector<Candidate>& family) {
  const int size = static_cast<int>(family.size());
  for (int k = size - 2; k >= 0; --k) {
    if (family[k + 1].solution.cost < family[k].solution.cost) family[k] = family[k + 1];
  }
  const std::vector<ItemIndex> cheapest = cheapest_items(instance, residual);
  const long limit = 4L * static_cast<long>(residual.size()) * static_cast<long>(residual.size()) + 16;
  int passes = 0;
  for (;;) {
    bool changed = false;
    for (int k = 0; k + 1 < size && !changed; ++k) {
      const int j = first + k;
      const Candidate& cur = family[k];
      Candidate& next = family[k + 1];
      if (static_cast<int>(cur.covered.size()) > j && next.solution.cost != cur.solution.cost) {
        next = cur;
        changed = true;
        break;
      }
      // Cheapest request outside X_j, then lowest id.
      std::optional<std::size_t> pick;
      for (std::size_t p = 0; p < residual.size(); ++p) {
        if (contains(cur.covered, residual[p])) continue;
        const Rational& c = instance.item_cost(cheapest[p]);
        if (!pick || c < instance.item_cost(cheapest[*pick])) pick = p;
      }
      if (pick && instance.item_cost(cheapest[*pick]) + cur.solution.cost < next.solution.cost) {
        std::vector<ItemIndex> items = cur.solution.items;
        items.push_back(cheapest[*pick]);
        next = make_candidate(PartialSolution::from_items(instance, std::move(items)), residual);
        changed = true;
      }
    }
    if (!changed) break;
    if (++passes > limit) throw ContractViolation("layer family fixups did not settle");
  }
  return passes;
}

}  // namespace

double g_value(const Rational& alpha, double gamma, int64_t t) {
  if (alpha < Rational(1, 1)) throw DomainError("alpha must be at least 1");
  if (!(gamma >= 1.0)) throw DomainError("gamma must be at least 1");
  if (t < 1) throw DomainError("t must be positive");
  if (gamma == 1.0) return alpha.to_double();
  return alpha.to_double() *
         (1.0 + std::log(static_cast<double>(t)) / std::log(gamma / (gamma - 1.0)));
}

PartialSolution approx_min_cover(const CoveringInstance& instance, const OracleSpec& spec,
                                 const RequestSet& residual, int i, int* iterations) {
  if (i < 1 || i > static_cast<int>(residual.size())) {
    throw DomainError("cover target " + std::to_string(i) + " outside 1.." +
                      std::to_string(residual.size()));
  }
  PartialSolution acc;
  RequestSet remaining = residual;
  int h = i;
  int calls = 0;
  while (h > 0) {
    PartialSolution s = spec.oracle(remaining, h);
    ++calls;
    const RequestSet fresh = set_intersection(s.covered, remaining);
    const int need = needed_per_call(h, spec.gamma);
    if (static_cast<int>(fresh.size()) < need) {
      throw ContractViolation(spec.name + " oracle covered " + std::to_string(fresh.size()) +
                              " of " + std::to_string(h) + " requested, needs " +
                              std::to_string(need));
    }
    acc = merge(instance, acc, s);
    remaining = set_minus(remaining, fresh);
    h -= static_cast<int>(fresh.size());
  }
  if (iterations) *iterations = calls;
  return acc;
}

Decomposition build_decomposition(const CoveringInstance& instance,
                                  const RequestSet& prediction, const OracleSpec& spec) {
  Decomposition d = empty_decomposition(prediction);
  d.oracle_name = spec.name;
  if (prediction.empty()) return d;

  RequestSet residual = prediction;
  {
    PartialSolution s = approx_min_cover(instance, spec, residual, ceil_half(residual.size()));
    RequestSet x = set_intersection(s.covered, residual);
    d.layers.push_back({x, std::move(s)});
    LayerConstructionLog log;
    log.first_index = ceil_half(residual.size());
    log.chosen_index = log.first_index;
    log.family_costs = {d.layers.back().cost()};
    d.log.push_back(std::move(log));
    residual = set_minus(residual, x);
  }

  while (!residual.empty()) {
    const int n = static_cast<int>(residual.size());
    const int first = ceil_half(residual.size());
    std::vector<Candidate> family;
    family.reserve(static_cast<std::size_t>(n - first + 1));
    for (int j = first; j <= n; ++j) {
      family.push_back(make_candidate(approx_min_cover(instance, spec, residual, j), residual));
    }
    LayerConstructionLog log;
    log.first_index = first;
    log.fixup_passes = fix_family(instance, residual, first, family);
    for (const Candidate& c : family) log.family_costs.push_back(c.solution.cost);

    const Rational previous = d.layers.back().cost();
    int chosen = 0;
    if (family[0].solution.cost >= Rational(2, 1) * previous) {
      log.construction_case = 1;
    } else {
      log.construction_case = 2;
      const Rational cap = Rational(10, 1) * previous;
      for (int k = static_cast<int>(family.size()) - 1; k >= 0; --k) {
        if (family[static_cast<std::size_t>(k)].solution.cost <= cap) {
          chosen = k;
          break;
        }
      }
    }
    log.chosen_index = first + chosen;
    Candidate& pick = family[static_cast<std::size_t>(chosen)];
    d.layers.push_back({pick.covered, std::move(pick.solution)});
    d.log.push_back(std::move(log));
    residual = set_minus(residual, d.layers.back().requests);
  }
  d.recompute_residuals();
  return d;
}

PartialSolution enumerate_min_cover(const CoveringInstance& instance,
                                    const RequestSet& residual, int i,
                                    const EnumerationCaps& caps) {
  if (i <= 0) return {};
  if (static_cast<int>(residual.size()) > std::min(caps.max_requests, 30)) {
    throw SizeLimitError("residual of " + std::to_string(residual.size()) +
                         " requests exceeds the cap of " + std::to_string(caps.max_requests));
  }
  if (i > static_cast<int>(residual.size())) {
    throw DomainError("cannot cover " + std::to_string(i) + " of " +
                      std::to_string(residual.size()) + " requests");
  }
  std::vector<ItemIndex> relevant;
  std::vector<uint32_t> masks;
  for (ItemIndex item = 0; item < instance.num_items(); ++item) {
    uint32_t m = 0;
    for (std::size_t p = 0; p < residual.size(); ++p) {
      if (instance.item_covers_request(item, residual[p])) m |= 1u << p;
    }
    if (m != 0) {
      relevant.push_back(item);
      masks.push_back(m);
    }
  }
  if (static_cast<int>(relevant.size()) > std::min(caps.max_items, 30)) {
    throw SizeLimitError(std::to_string(relevant.size()) + " relevant items exceed the cap of " +
                         std::to_string(caps.max_items));
  }
  std::optional<Rational> best_cost;
  uint32_t best = 0;
  const uint32_t subsets = 1u << relevant.size();
  for (uint32_t s = 0; s < subsets; ++s) {
    uint32_t cover = 0;
    Rational cost;
    for (std::size_t b = 0; b < relevant.size(); ++b) {
      if (s >> b & 1u) {
        cover |= masks[b];
        cost += instance.item_cost(relevant[b]);
      }
    }
    if (std::popcount(cover) < i) continue;
    if (!best_cost || cost < *best_cost) {
      best_cost = cost;
      best = s;
    }
  }
  if (!best_cost) throw InfeasibleError("residual cannot be covered");
  std::vector<ItemIndex> items;
  for (std::size_t b = 0; b < relevant.size(); ++b) {
    if (best >> b & 1u) items.push_back(relevant[b]);
  }
  return PartialSolution::from_items(instance, std::move(items));
}

bool PropertyReport::ok() const { return first_violation().empty(); }

std::string PropertyReport::first_violation() const {
  for (const LayerReport& l : layers) {
    const std::string at = "layer " + std::to_string(l.layer) + ": ";
    if (!l.a) return at + "(A) fewer than half the residual";
    if (!l.b) return at + "(B) cost did not grow past 8x the layer before";
    if (!l.c) return at + "(C) cost exceeds g * C1 = g * " + l.c1->to_short_string();
    if (!l.d) return at + "(D) cost exceeds g * C2 = g * " + l.c2.to_short_string();
  }
  return {};
}

PropertyReport verify_properties(const CoveringInstance& instance,
                                 const Decomposition& decomposition, const Rational& alpha,
                                 double gamma, const ExactCostOracle& exact) {
  decomposition.validate(instance);
  PropertyReport report;
  const auto t = static_cast<int64_t>(std::max<std::size_t>(decomposition.prediction.size(), 1));
  report.g = g_value(alpha, gamma, t);
  // cost <= g * bound, exactly when gamma = 1.
  auto within = [&](const Rational& cost, const Rational& bound) {
    if (gamma == 1.0) return cost <= alpha * bound;
    const double rhs = report.g * bound.to_double();
    return cost.to_double() <= rhs + 1e-9 * std::max(1.0, rhs);
  };

  const int count = static_cast<int>(decomposition.size());
  for (int i = 1; i <= count; ++i) {
    LayerReport l;
    l.layer = i;
    const RequestSet& before = decomposition.residuals[static_cast<std::size_t>(i - 1)];
    const Layer& layer = decomposition.layer(i);
    const Rational ci = layer.cost();

    l.a = 2 * layer.requests.size() >= before.size();

    if (i == 1 || i == count) {
      l.b_vacuous = true;
    } else {
      const Rational prev = decomposition.layer_cost(i - 1);
      if (ci < Rational(2, 1) * prev) {
        l.b = Rational(8, 1) * prev < decomposition.layer_cost(i + 1);
      } else {
        l.b_vacuous = true;
      }
    }

    if (i == 1 || !(ci > Rational(10, 1) * decomposition.layer_cost(i - 1))) {
      l.c_vacuous = true;
    } else {
      l.c1 = exact(before, ceil_half(before.size()));
      l.c = within(ci, *l.c1);
    }

    const int target = i == 1 ? ceil_half(before.size()) : static_cast<int>(layer.requests.size());
    l.c2 = exact(before, target);
    l.d = within(ci, l.c2);
    report.layers.push_back(std::move(l));
  }
  return report;
}

}  // namespace ice
