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
#include "ice/decomp/decomposition_builder.h"
#include "ice/setcover/oracles.h"
#include "support.h"

using namespace ice;

namespace {

ExactCostOracle brute_oracle(const CoveringInstance& inst) {
  return [&inst](const RequestSet& residual, int i) {
    return testing::brute_partial_cover(inst, residual, i).cost;
  };
}

}  // namespace

TEST_CASE("g function") {
  CHECK(g_value(Rational(1), 1.0, 100) == 1.0);
  CHECK(g_value(Rational(3), 1.0, 7) == 3.0);
  // gamma / (gamma - 1) = e for gamma = e / (e - 1), so g = 1 + ln 21 at t = ceil(e^3).
  CHECK(g_value(Rational(1), kBmcGamma, 21) == doctest::Approx(4.044522437723423).epsilon(1e-12));
  CHECK(g_value(Rational(2), kBmcGamma, 1) == doctest::Approx(2.0));
  CHECK_THROWS_AS(g_value(Rational(1), 0.5, 3), DomainError);
  CHECK_THROWS_AS(g_value(Rational(1, 2), 1.0, 3), DomainError);
  CHECK_THROWS_AS(g_value(Rational(1), 1.0, 0), DomainError);
}

TEST_CASE("covering loop with the exact oracle") {
  const auto inst = testing::scb();
  const OracleSpec spec = setcover::exact_oracle_spec(inst);
  int iterations = 0;
  const auto sol = approx_min_cover(inst, spec, {1, 2, 3, 4}, 3, &iterations);
  CHECK(sol.items == std::vector<ItemIndex>{0});
  CHECK(sol.cost == Rational(1));
  CHECK(iterations == 1);

  const auto all = approx_min_cover(inst, spec, {1, 2, 3, 4}, 4, &iterations);
  CHECK(all.cost == Rational(3, 2));
  CHECK(iterations == 1);
  CHECK_THROWS_AS(approx_min_cover(inst, spec, {1, 2}, 3), DomainError);
  CHECK_THROWS_AS(approx_min_cover(inst, spec, {1, 2}, 0), DomainError);
}

TEST_CASE("covering loop with the budgeted greedy oracle") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = testing::random_weighted(seed, 10, 8, 5);
    const OracleSpec spec = setcover::bmc_oracle_spec(inst);
    const RequestSet all = full_request_set(10);
    int iterations = 0;
    const auto sol = approx_min_cover(inst, spec, all, 10, &iterations);
    CHECK(sol.num_covered_in(all) == 10);
    const Rational opt = testing::brute_cover(inst, all);
    CHECK(sol.cost.to_double() <= (1.0 + std::log(10.0)) * opt.to_double() + 1e-9);
    CHECK(iterations <= static_cast<int>(std::ceil(std::log(10.0))) + 1);
  }
}

TEST_CASE("covering loop rejects a weak oracle") {
  const auto inst = testing::scb();
  OracleSpec spec;
  spec.name = "weak";
  spec.oracle = [](const RequestSet&, int) { return PartialSolution{}; };
  CHECK_THROWS_AS(approx_min_cover(inst, spec, {1, 2, 3, 4}, 2), ContractViolation);
}

TEST_CASE("decomposition of the four-element example") {
  const auto inst = testing::scb();
  const Decomposition d =
      build_decomposition(inst, {1, 2, 3, 4}, setcover::exact_oracle_spec(inst));
  REQUIRE(d.size() == 2);
  CHECK(d.layer(1).requests == RequestSet{1, 2, 3});
  CHECK(d.layer(1).solution.items == std::vector<ItemIndex>{0});
  CHECK(d.layer_cost(1) == Rational(1));
  CHECK(d.layer(2).requests == RequestSet{4});
  CHECK(d.layer(2).solution.items == std::vector<ItemIndex>{2});
  CHECK(d.layer_cost(2) == Rational(1, 2));
  CHECK(d.log[1].construction_case == 2);
  CHECK(d.residuals.back().empty());

  const PropertyReport report = verify_properties(inst, d, Rational(1), 1.0, brute_oracle(inst));
  CHECK(report.ok());
  CHECK(report.layers[1].b_vacuous);
  CHECK(report.layers[0].b_vacuous);
  CHECK(report.layers[0].c_vacuous);
}

TEST_CASE("decomposition boundary cases") {
  const auto inst = testing::scb();
  const OracleSpec spec = setcover::exact_oracle_spec(inst);
  CHECK(build_decomposition(inst, {}, spec).empty());
  const Decomposition one = build_decomposition(inst, {4}, spec);
  REQUIRE(one.size() == 1);
  CHECK(one.layer(1).solution.items == std::vector<ItemIndex>{2});
  const PropertyReport report = verify_properties(inst, one, Rational(1), 1.0, brute_oracle(inst));
  CHECK(report.ok());
  CHECK(report.layers[0].b_vacuous);
  CHECK(report.layers[0].c_vacuous);
}

TEST_CASE("property (A) violation is reported") {
  const auto inst = testing::scb();
  Decomposition d;
  d.prediction = {1, 2, 3, 4};
  d.layers.push_back({{4}, PartialSolution::from_items(inst, {2})});
  d.layers.push_back({{1, 2, 3}, PartialSolution::from_items(inst, {0})});
  d.recompute_residuals();
  const PropertyReport report = verify_properties(inst, d, Rational(1), 1.0, brute_oracle(inst));
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.layers[0].a);
  CHECK(report.first_violation().find("(A)") != std::string::npos);
}

TEST_CASE("constructed decompositions satisfy the layer properties") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = testing::random_weighted(seed, 12, 9, 5);
    const RequestSet prediction = testing::random_subset(seed + 100, 12, 0.8);
    if (prediction.empty()) continue;
    const Decomposition d =
        build_decomposition(inst, prediction, setcover::exact_oracle_spec(inst));
    CHECK_NOTHROW(d.validate(inst));

    // Family costs are monotone in j.
    for (const auto& log : d.log) {
      for (std::size_t j = 1; j < log.family_costs.size(); ++j) {
        CHECK(log.family_costs[j - 1] <= log.family_costs[j]);
      }
    }

    const PropertyReport report =
        verify_properties(inst, d, Rational(1), 1.0, brute_oracle(inst));
    CHECK_MESSAGE(report.ok(), "seed " << seed << ": " << report.first_violation());

    // Two consecutive costs are at most 3/4 of the next two.
    for (int j = 1; j + 3 <= static_cast<int>(d.size()); ++j) {
      const Rational lhs = d.layer_cost(j) + d.layer_cost(j + 1);
      const Rational rhs = Rational(3, 4) * (d.layer_cost(j + 2) + d.layer_cost(j + 3));
      CHECK(lhs <= rhs);
    }
  }
}

TEST_CASE("enumeration respects its caps") {
  const auto inst = testing::random_weighted(1, 14, 6, 4);
  CHECK_THROWS_AS(enumerate_min_cover(inst, full_request_set(14), 3), SizeLimitError);
  const auto big = testing::random_weighted(2, 8, 12, 3);
  CHECK_THROWS_AS(enumerate_min_cover(big, full_request_set(8), 3), SizeLimitError);
  const auto small = testing::random_weighted(3, 8, 7, 3);
  for (int i = 0; i <= 8; ++i) {
    CHECK(enumerate_min_cover(small, full_request_set(8), i).cost ==
          testing::brute_partial_cover(small, full_request_set(8), i).cost);
  }
}

TEST_CASE("decomposition text round trip") {
  const auto inst = testing::random_weighted(5, 12, 9, 5);
  const Decomposition d =
      build_decomposition(inst, full_request_set(12), setcover::exact_oracle_spec(inst));
  const std::string text = dump_decomposition(inst, d);
  CHECK(text.rfind("layer 1 cost ", 0) == 0);
  std::istringstream in(text);
  const Decomposition back = read_decomposition(in, inst);
  REQUIRE(back.size() == d.size());
  for (int i = 1; i <= static_cast<int>(d.size()); ++i) {
    CHECK(back.layer(i).requests == d.layer(i).requests);
    CHECK(back.layer(i).solution == d.layer(i).solution);
  }
  CHECK(back.prediction == d.prediction);
}

TEST_CASE("decomposition text errors carry the line") {
  const auto inst = testing::scb();
  auto parse = [&](const std::string& text) {
    std::istringstream in(text);
    return read_decomposition(in, inst);
  };
  CHECK(parse("layer 1 cost 1/1 requests 1 2 3 items 1\n").size() == 1);
  try {
    parse("layer 1 cost 1/1 requests 1 2 3 items 1\nlayer 2 cost 1/1 requests 4 items 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("layer 1 cost 1/1 requests 1 items 9\n"), ParseError);
  CHECK_THROWS_AS(parse("layer x\n"), ParseError);
}
