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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "ice/core/errors.h"
#include "ice/setcover/instance.h"
#include "ice/setcover/online.h"
#include "ice/setcover/oracles.h"
#include "support.h"

using namespace ice;
using namespace ice::setcover;

namespace {

SetCoverInstance pace(const std::string& text) {
  std::istringstream in(text);
  return load_pace(in);
}

SetCoverInstance json(const std::string& text) {
  std::istringstream in(text);
  return load_json(in);
}

int pace_error_line(const std::string& text) {
  try {
    pace(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

int needed(int i) { return static_cast<int>(std::ceil((1.0 - 1.0 / std::exp(1.0)) * i - 1e-12)); }

}  // namespace

TEST_CASE("PACE input") {
  const auto inst = pace("p hs 3 2\n1 2\n2 3\n");
  CHECK(inst.n_elements() == 3);
  CHECK(inst.n_sets() == 2);
  CHECK(inst.item_covers(0)[1] == 2);
  CHECK(inst.item_cost(1) == Rational(1));
  CHECK(inst.unit_costs());
  CHECK(pace("c comment\np hs 2 1\nc another\n2 1\n").item(0).covers == RequestSet{1, 2});

  CHECK(pace_error_line("p hs 3 2\n1 2\n2 4\n") == 3);
  CHECK(pace_error_line("p xx 3 2\n") == 1);
  CHECK(pace_error_line("1 2\n") == 1);
  CHECK(pace_error_line("p hs 3 1\n1 2 x\n") == 2);
  CHECK(pace_error_line("p hs 3 1\n1 1 3 2\n") == 2);
  CHECK(pace_error_line("p hs 3 2\n1 2 3\n") == 2);  // a set is missing
  CHECK(pace_error_line("p hs 3 1\n1 2\n") > 0);     // element 3 uncoverable
}

TEST_CASE("JSON input") {
  const auto inst = json(R"({"n":3,"sets":[{"id":7,"cost":"3/2","members":[1,2]},
                                           {"id":9,"cost":"1/2","members":[3]}]})");
  CHECK(inst.item_cost(0) == Rational(3, 2));
  CHECK(inst.item_id(1) == 9);
  CHECK_FALSE(inst.unit_costs());
  try {
    json(R"({"n":4,"sets":[{"id":1,"cost":"3/2","members":[1,2]}]})");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("uncoverable element") != std::string::npos);
  }
  CHECK_THROWS_AS(json(R"({"n":2,"sets":[{"id":1,"cost":"1","members":[]}]})"), ParseError);
  CHECK_THROWS_AS(json(R"({"n":2,"sets":[{"id":1,"cost":"1","members":[1,5]}]})"), ParseError);
  CHECK_THROWS_AS(json("{"), ParseError);
}

TEST_CASE("instances survive a dump and reload") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const auto unit = gen_random(seed, 30, 12, 6);
    for (Format f : {Format::kPace, Format::kJson}) {
      std::stringstream ss;
      dump_instance(ss, unit, f);
      const auto back = load_instance(ss, f);
      REQUIRE(back.n_sets() == unit.n_sets());
      for (ItemIndex s = 0; s < unit.n_sets(); ++s) CHECK(back.item(s).covers == unit.item(s).covers);
    }
    const auto weighted = testing::random_weighted(seed, 15, 8, 6);
    std::stringstream ss;
    dump_json(ss, weighted);
    const auto back = load_json(ss);
    for (ItemIndex s = 0; s < weighted.n_sets(); ++s) {
      CHECK(back.item(s).cost == weighted.item(s).cost);
      CHECK(back.item(s).id == weighted.item(s).id);
    }
    std::stringstream p;
    CHECK_THROWS_AS(dump_pace(p, weighted), DomainError);
  }
}

TEST_CASE("random generation") {
  const auto a = gen_random(7, 1000, 100, 50);
  CHECK(a.n_elements() == 1000);
  CHECK(a.uncoverable_requests().empty());
  for (ItemIndex s = 0; s < a.n_sets(); ++s) CHECK(a.item(s).covers.size() == 50);
  std::stringstream x, y;
  dump_pace(x, a);
  dump_pace(y, gen_random(7, 1000, 100, 50));
  CHECK(x.str() == y.str());
  const auto full = gen_random(1, 10, 5, 10);
  for (ItemIndex s = 0; s < 5; ++s) CHECK(full.item(s).covers == full_request_set(10));
  CHECK_THROWS_AS(gen_random(1, 10, 2, 3), GenerationError);
  CHECK_THROWS_AS(gen_random(1, 10, 2, 11), DomainError);
}

TEST_CASE("budgeted coverage on the four-element example") {
  const auto inst = testing::scb();
  const RequestSet all{1, 2, 3, 4};
  const auto s = bmc_greedy(inst, all, Rational(3, 2));
  CHECK(s.items == std::vector<ItemIndex>{0, 2});
  CHECK(s.num_covered_in(all) == 4);
  CHECK(s.cost == Rational(3, 2));
  const auto none = bmc_greedy(inst, all, Rational());
  CHECK(none.items.empty());
  CHECK(none.cost == Rational());
  CHECK(bmc_greedy(inst, all, Rational(3, 2), BmcVariant::kPlain).num_covered_in(all) == 4);
}

TEST_CASE("budgeted coverage guarantee at the optimal budget") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = testing::random_weighted(seed, 12, 9, 6);
    const RequestSet all = full_request_set(12);
    for (int i = 1; i <= 12; ++i) {
      const Rational opt = testing::brute_partial_cover(inst, all, i).cost;
      const auto s = bmc_greedy(inst, all, opt, BmcVariant::kSeeded3);
      CHECK(s.cost <= opt);
      CHECK(static_cast<int>(s.num_covered_in(all)) >= needed(i));
    }
  }
}

TEST_CASE("partial cover oracle") {
  const auto inst = testing::scb();
  const auto four = partial_cover_oracle(inst, {1, 2, 3, 4}, 4);
  CHECK(four.items == std::vector<ItemIndex>{0});
  CHECK(four.cost == Rational(1));
  const auto one = partial_cover_oracle(inst, {1, 2, 3, 4}, 1);
  CHECK(one.items == std::vector<ItemIndex>{2});
  CHECK_THROWS_AS(partial_cover_oracle(inst, {1, 2}, 3), DomainError);

  for (uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = testing::random_weighted(seed + 50, 12, 9, 6);
    const RequestSet residual = testing::random_subset(seed, 12, 0.7);
    for (int i = 1; i <= static_cast<int>(residual.size()); ++i) {
      const auto s = partial_cover_oracle(w, residual, i);
      CHECK(s.cost <= testing::brute_partial_cover(w, residual, i).cost);
      CHECK(static_cast<int>(s.num_covered_in(residual)) >= needed(i));
    }
  }
}

TEST_CASE("exact partial cover") {
  const auto inst = testing::scb();
  CHECK(exact_partial_cover(inst, {1, 2, 3, 4}, 4).cost == Rational(3, 2));
  CHECK(exact_partial_cover(inst, {1, 2, 3, 4}, 3).cost == Rational(1));
  CHECK(exact_partial_cover(inst, {1, 2, 3, 4}, 0).items.empty());
  CHECK_THROWS_AS(exact_partial_cover(inst, {1}, 2), DomainError);

  for (uint64_t seed = 0; seed < 40; ++seed) {
    const auto w = testing::random_weighted(seed, 14, 10, 5);
    const RequestSet residual = testing::random_subset(seed + 9, 14, 0.8);
    for (int i = 1; i <= static_cast<int>(residual.size()); ++i) {
      const auto s = exact_partial_cover(w, residual, i);
      CHECK(s.cost == testing::brute_partial_cover(w, residual, i).cost);
      CHECK(static_cast<int>(s.num_covered_in(residual)) >= i);
      CHECK(s.consistent_with(w));
    }
  }
}

TEST_CASE("exact partial cover gives up at the node limit") {
  const auto inst = gen_random(3, 200, 40, 20);
  ExactOptions tight;
  tight.node_limit = 1;
  try {
    exact_partial_cover(inst, full_request_set(200), 200, tight);
    FAIL("expected the node limit");
  } catch (const NodeLimitError& e) {
    CHECK(e.lower_bound() <= e.incumbent().cost);
    CHECK(e.incumbent().num_covered_in(full_request_set(200)) == 200);
  }
}

TEST_CASE("root bound never exceeds the optimum") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = testing::random_weighted(seed, 14, 9, 5);
    const RequestSet residual = testing::random_subset(seed + 100, 14, 0.8);
    for (int i = 1; i <= static_cast<int>(residual.size()); ++i) {
      CHECK(exact_lower_bound(inst, residual, i) <= exact_partial_cover(inst, residual, i).cost);
    }
  }
  const auto big = gen_random(3, 200, 40, 20);
  const Rational lb = exact_lower_bound(big, full_request_set(200), 200);
  CHECK(lb > Rational());
  CHECK(lb <= greedy_cover(big, full_request_set(200)).cost);
}

TEST_CASE("offline greedy covers everything asked") {
  const auto inst = testing::random_weighted(4, 20, 12, 6);
  const RequestSet want = testing::random_subset(1, 20, 0.5);
  const auto g = greedy_cover(inst, want);
  CHECK(g.num_covered_in(want) == want.size());
}

TEST_CASE("fractional cover update rule") {
  const auto inst = testing::scb();
  FractionalCover alg(inst, 0, {});
  alg.step(3);
  CHECK(alg.x(0) == doctest::Approx(0.5));
  CHECK(alg.x(1) == doctest::Approx(0.5));
  CHECK(alg.x(2) == 0.0);
  const double before = alg.x(0);
  alg.step(3);  // already fractionally covered
  CHECK(alg.x(0) == before);
}

TEST_CASE("fractional cover stays monotone and feasible") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = testing::random_weighted(seed, 25, 12, 7);
    FractionalCover alg(inst, seed, {});
    std::vector<double> last(static_cast<std::size_t>(inst.n_sets()), 0.0);
    std::vector<char> owned(static_cast<std::size_t>(inst.n_sets()), 0);
    Rng rng(seed);
    std::vector<RequestId> order = full_request_set(25);
    rng.shuffle(order);
    for (RequestId e : order) {
      const auto step = alg.step(e);
      Rational paid;
      for (ItemIndex s : step.bought) {
        CHECK_FALSE(owned[static_cast<std::size_t>(s)]);
        owned[static_cast<std::size_t>(s)] = 1;
        paid += inst.item_cost(s);
      }
      CHECK(paid == step.cost);
      double sum = 0.0;
      bool covered = false;
      for (ItemIndex s : inst.items_covering(e)) {
        sum += alg.x(s);
        covered = covered || owned[static_cast<std::size_t>(s)];
      }
      CHECK(sum >= 1.0 - 1e-9);
      CHECK(covered);
      for (ItemIndex s = 0; s < inst.n_sets(); ++s) {
        CHECK(alg.x(s) >= last[static_cast<std::size_t>(s)]);
        last[static_cast<std::size_t>(s)] = alg.x(s);
      }
    }
  }
}

TEST_CASE("fractional cover on the four-element example over many seeds") {
  const auto inst = testing::scb();
  const FractionalCoverAdapter adapter(inst);
  double total = 0.0;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    auto alg = adapter.create(seed, {});
    Rational cost;
    for (RequestId e : {1, 2, 3, 4}) cost += alg->step(e).cost;
    CHECK(cost <= Rational(6));  // 4 x opt
    total += cost.to_double();
  }
  CHECK(total / 1000.0 <= 3.0);  // 2 x opt on average
}

TEST_CASE("fractional cover is deterministic per seed") {
  const auto inst = testing::random_weighted(8, 30, 15, 8);
  auto run = [&](uint64_t seed) {
    FractionalCover alg(inst, seed, {});
    std::vector<ItemIndex> bought;
    for (RequestId e = 1; e <= 30; ++e) {
      for (ItemIndex s : alg.step(e).bought) bought.push_back(s);
    }
    return bought;
  };
  CHECK(run(5) == run(5));
}
