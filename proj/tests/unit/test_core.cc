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

#include <sstream>

#include "doctest.h"
#include "ice/core/errors.h"
#include "ice/core/ice.h"
#include "ice/core/random.h"
#include "ice/core/rational.h"
#include "ice/core/trace_checks.h"
#include "support.h"

using namespace ice;

TEST_CASE("rational arithmetic is exact and normalized") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(4, 3) == Rational(1));
  CHECK(Rational(1) / Rational(3) < Rational(34, 100));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(), DomainError);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-4/8") == Rational(-1, 2));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(2).to_string() == "2/1");
  CHECK(Rational(2).to_short_string() == "2");
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/"));
}

TEST_CASE("rational overflow is reported") {
  const Rational big(INT64_MAX / 2);
  CHECK_THROWS_AS(big * Rational(4), OverflowError);
  // Intermediate products may exceed 64 bits as long as the result fits.
  CHECK(Rational(INT64_MAX / 3, 7) * Rational(7, INT64_MAX / 3) == Rational(1));
}

TEST_CASE("rational helpers") {
  CHECK(rational_gcd(Rational(3, 2), Rational(1)) == Rational(1, 2));
  CHECK(rational_gcd(Rational(), Rational(5, 4)) == Rational(5, 4));
  CHECK(ceil_log(Rational(1), 4) == 0);
  CHECK(ceil_log(Rational(5, 2), 4) == 1);
  CHECK(ceil_log(Rational(4), 4) == 1);
  CHECK(ceil_log(Rational(1, 4), 4) == -1);
  CHECK(ceil_log(Rational(1, 5), 4) == -1);
  CHECK(rational_pow(4, -2) == Rational(1, 16));
}

TEST_CASE("request set operations") {
  const RequestSet a = make_request_set({3, 1, 2, 3});
  CHECK(a == RequestSet{1, 2, 3});
  const RequestSet b{2, 3, 4};
  CHECK(set_union(a, b) == RequestSet{1, 2, 3, 4});
  CHECK(set_minus(a, b) == RequestSet{1});
  CHECK(set_intersection(a, b) == RequestSet{2, 3});
  CHECK(intersection_size(a, b) == 2);
  CHECK(full_request_set(3) == RequestSet{1, 2, 3});
}

TEST_CASE("prediction error") {
  CHECK(prediction_error({1, 2, 3}, {2, 3, 4}) == 2);
  CHECK(prediction_error({5, 6}, {5, 6}) == 0);
  CHECK(prediction_error({1}, {2, 3, 4, 5, 6, 7, 8, 9}) == 1);
  CHECK(prediction_error({}, {1, 2}) == 0);
  CHECK(prediction_error({1, 2}, {}) == 2);
}

TEST_CASE("covering instance validation") {
  CHECK_THROWS_AS(CoveringInstance(2, {{1, Rational(1), {3}}}), DomainError);
  CHECK_THROWS_AS(CoveringInstance(2, {{1, Rational(-1), {1}}}), DomainError);
  CHECK_THROWS_AS(CoveringInstance(2, {{1, Rational(1), {1}}, {1, Rational(1), {2}}}),
                  DomainError);
  const CoveringInstance inst(3, {{10, Rational(2), {1, 2}}, {11, Rational(1), {2}}});
  CHECK(inst.uncoverable_requests() == RequestSet{3});
  CHECK(inst.cheapest_item_for(2) == 1);
  CHECK(inst.find_item(10) == 0);
  CHECK_FALSE(inst.find_item(12).has_value());
  const auto sol = PartialSolution::from_items(inst, {1, 0});
  CHECK(sol.items == std::vector<ItemIndex>{0, 1});
  CHECK(sol.covered == RequestSet{1, 2});
  CHECK(sol.cost == Rational(3));
  CHECK(sol.consistent_with(inst));
}

TEST_CASE("seed derivation is stable") {
  CHECK(derive_seed(0, 1) != derive_seed(0, 2));
  CHECK(derive_seed(5, 1) == derive_seed(5, 1));
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = c.below(7);
    CHECK(x < 7);
    const double u = c.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

namespace {

Decomposition scb_decomposition(const setcover::SetCoverInstance& inst) {
  Decomposition d;
  d.prediction = {1, 2, 3, 4};
  d.layers.push_back({{1, 2, 3}, PartialSolution::from_items(inst, {0})});
  d.layers.push_back({{4}, PartialSolution::from_items(inst, {2})});
  d.recompute_residuals();
  return d;
}

// Buys nothing, breaking the adapter contract.
class Lazy : public OnlineAdapter {
 public:
  std::unique_ptr<OnlineAlgorithm> create(uint64_t, const TieBreakHint&) const override {
    struct Algo : OnlineAlgorithm {
      StepResult step(RequestId) override { return {}; }
    };
    return std::make_unique<Algo>();
  }
  std::string name() const override { return "lazy"; }
};

}  // namespace

TEST_CASE("charging loop on the four-element example") {
  const auto inst = testing::scb();
  const Decomposition d = scb_decomposition(inst);
  const CheapestItemAdapter adapter(inst);
  const std::vector<RequestId> arrivals{1, 2, 3, 4};
  const IceTrace t = ice_run(inst, d.prediction, d, adapter, arrivals);

  std::vector<int> layers;
  for (const auto& l : t.layers_bought) layers.push_back(l.layer);
  CHECK(layers == std::vector<int>{1, 2});
  // Arrival 1 buys A (excess 1, layer 1 bought, excess 0). Arrival 2 buys A
  // again in the second incarnation (excess 1, layer 2 bought, excess 1/2).
  // Arrivals 3 and 4 go to the third incarnation: A then C.
  CHECK(t.total_cost == Rational(5));
  CHECK(t.layers_cost == Rational(3, 2));
  CHECK(t.final_excess == Rational(2));
  CHECK(t.alg_minus_costs.size() == 3);
  CHECK(t.solution_cost == Rational(3, 2));
  CHECK(t.k == 4);
  CHECK(t.k_minus == 4);
  CHECK(t.delta_minus == 0);

  const auto ref = testing::reference_ice(inst, d, adapter, arrivals, 0, false);
  CHECK(ref.total == t.total_cost);
  CHECK(ref.layers == layers);
  for (std::size_t i = 0; i < t.events.size(); ++i) CHECK(ref.excess_after[i] == t.events[i].excess_after);

  CHECK(check_prefix_feasibility(inst, d, t).ok);
  CHECK(check_excess_accounting(d, t).ok);
  CHECK(check_counters(t).ok);
  CHECK(check_layer_cost_growth(d, t).ok);
  CHECK(check_robustness(inst, d.prediction, d, adapter, arrivals, {}, t).ok);
}

TEST_CASE("a tie between excess and layer cost buys the layer") {
  const CoveringInstance inst(2, {{1, Rational(1), {1}}, {2, Rational(1), {2}}});
  Decomposition d;
  d.prediction = {1, 2};
  d.layers.push_back({{2}, PartialSolution::from_items(inst, {1})});
  d.layers.push_back({{1}, PartialSolution::from_items(inst, {0})});
  d.recompute_residuals();
  const CheapestItemAdapter adapter(inst);
  const std::vector<RequestId> arrivals{1};
  const IceTrace t = ice_run(inst, d.prediction, d, adapter, arrivals);
  REQUIRE(t.layers_bought.size() == 1);
  CHECK(t.layers_bought[0].excess_before == Rational(1));
}

TEST_CASE("empty prediction degenerates to the plain adapter") {
  const auto inst = testing::scb();
  const CheapestItemAdapter adapter(inst);
  const std::vector<RequestId> arrivals{4, 3, 1};
  const IceTrace t = ice_run(inst, {}, empty_decomposition({}), adapter, arrivals);
  const IceTrace p = run_plain(inst, adapter, arrivals);
  CHECK(t.to_text(inst) == p.to_text(inst));
  CHECK(t.k_plus == 3);
  CHECK(t.layers_bought.empty());
  for (const auto& e : t.events) CHECK(e.excess_after == Rational());
}

TEST_CASE("no arrivals costs nothing") {
  const auto inst = testing::scb();
  const Decomposition d = scb_decomposition(inst);
  const IceTrace t = ice_run(inst, d.prediction, d, CheapestItemAdapter(inst), {});
  CHECK(t.total_cost == Rational());
  CHECK(t.events.empty());
  CHECK(t.delta_minus == 4);
}

TEST_CASE("invalid runs are rejected") {
  const auto inst = testing::scb();
  Decomposition d = scb_decomposition(inst);
  const CheapestItemAdapter adapter(inst);
  const std::vector<RequestId> twice{1, 1};
  CHECK_THROWS_AS(ice_run(inst, d.prediction, d, adapter, twice), ConfigError);
  const std::vector<RequestId> unknown{9};
  CHECK_THROWS_AS(ice_run(inst, d.prediction, d, adapter, unknown), ConfigError);
  CHECK_THROWS_AS(ice_run(inst, {1, 2, 3}, d, adapter, {}), ConfigError);

  Decomposition overlap = d;
  overlap.layers[1].requests = {3, 4};
  overlap.recompute_residuals();
  CHECK_THROWS_AS(ice_run(inst, d.prediction, overlap, adapter, {}), ConfigError);

  const std::vector<RequestId> one{1};
  CHECK_THROWS_AS(ice_run(inst, d.prediction, d, Lazy(), one), ContractViolation);
}

TEST_CASE("skipping covered requests never costs more") {
  const auto inst = testing::scb();
  const Decomposition d = scb_decomposition(inst);
  const CheapestItemAdapter adapter(inst);
  const std::vector<RequestId> arrivals{1, 2, 3, 4};
  IceOptions skip;
  skip.skip_covered = true;
  const IceTrace a = ice_run(inst, d.prediction, d, adapter, arrivals);
  const IceTrace b = ice_run(inst, d.prediction, d, adapter, arrivals, skip);
  CHECK(b.total_cost <= a.total_cost);
  CHECK(check_prefix_feasibility(inst, d, b).ok);
  const auto ref = testing::reference_ice(inst, d, adapter, arrivals, 0, true);
  CHECK(ref.total == b.total_cost);
}

TEST_CASE("trace checks catch a tampered trace") {
  const auto inst = testing::scb();
  const Decomposition d = scb_decomposition(inst);
  const std::vector<RequestId> arrivals{1, 2, 3, 4};
  IceTrace t = ice_run(inst, d.prediction, d, CheapestItemAdapter(inst), arrivals);
  IceTrace bad = t;
  bad.events[1].excess_after = Rational(-1);
  CHECK_FALSE(check_excess_accounting(d, bad).ok);
  bad = t;
  bad.k_plus = 3;
  CHECK_FALSE(check_counters(bad).ok);
  bad = t;
  bad.events[0].items_bought.clear();
  bad.layers_bought.clear();
  for (auto& e : bad.events) e.layers_bought.clear();
  CHECK_FALSE(check_prefix_feasibility(inst, d, bad).ok);
}
