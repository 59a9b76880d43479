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

#ifndef ICE_DECOMP_DECOMPOSITION_BUILDER_H_
#define ICE_DECOMP_DECOMPOSITION_BUILDER_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ice/core/covering.h"
#include "ice/core/decomposition.h"

namespace ice {

// Returns a partial solution covering at least ceil(i / gamma) requests of
// `residual` at cost at most alpha times the cheapest way to cover i of them.
using PartialCoverOracle =
    std::function<PartialSolution(const RequestSet& residual, int i)>;

struct OracleSpec {
  std::string name;
  Rational alpha{1, 1};
  double gamma = 1.0;  // e/(e-1) for the budgeted coverage oracle
  PartialCoverOracle oracle;
};

// e / (e - 1)
inline constexpr double kBmcGamma = 1.5819767068693265;

// alpha if gamma == 1, else alpha * (1 + ln t / ln(gamma / (gamma - 1))).
// Throws ice::DomainError for alpha < 1, gamma < 1 or t < 1.
double g_value(const Rational& alpha, double gamma, int64_t t);

// Covers at least i requests of `residual` by calling the oracle with the
// number h still missing until nothing is missing. `iterations`, if given,
// receives the number of oracle calls. Throws ice::ContractViolation when
// an answer covers fewer than ceil(h / gamma) new requests and
// ice::DomainError unless 1 <= i <= |residual|.
PartialSolution approx_min_cover(const CoveringInstance& instance, const OracleSpec& spec,
                                 const RequestSet& residual, int i,
                                 int* iterations = nullptr);

// Layer construction. Layer 1 covers half of the prediction; each later
// layer is picked from a nested family of solutions for j >= |R_i|/2
// (made monotone in cost, with over-coverage and single-element extensions
// propagated) by the doubling rule against the previous layer's cost.
Decomposition build_decomposition(const CoveringInstance& instance,
                                  const RequestSet& prediction, const OracleSpec& spec);

// ---------------------------------------------------------------------------
// Verification.

// Exact minimum cost to cover i requests of a residual.
using ExactCostOracle = std::function<Rational(const RequestSet& residual, int i)>;

struct EnumerationCaps {
  int max_requests = 12;
  int max_items = 10;
};

// Enumerates every subset of the items touching `residual`. Throws
// ice::SizeLimitError past the caps.
PartialSolution enumerate_min_cover(const CoveringInstance& instance,
                                    const RequestSet& residual, int i,
                                    const EnumerationCaps& caps = {});

struct LayerReport {
  int layer = 0;
  bool a = true;
  bool b = true;
  bool c = true;
  bool d = true;
  bool b_vacuous = false;
  bool c_vacuous = false;
  std::optional<Rational> c1;  // only computed when (C) is not vacuous
  Rational c2;
};

struct PropertyReport {
  double g = 1.0;
  std::vector<LayerReport> layers;

  bool ok() const;
  // Human-readable first violation, empty when ok.
  std::string first_violation() const;
};

// Checks, per layer i (costs c_i, residual R_{i-1}):
//   (A) 2|X_i| >= |R_{i-1}|
//   (B) c_i < 2 c_{i-1}  =>  8 c_{i-1} < c_{i+1}   (vacuous without S_{i+1})
//   (C) c_i > 10 c_{i-1} =>  c_i <= g * C1,  C1 = opt for ceil(|R_{i-1}|/2)
//   (D) c_i <= g * C2,  C2 = opt for |X_i| of R_{i-1}; ceil(|prediction|/2)
//       for the first layer.
// g = g_value(alpha, gamma, |prediction|).
PropertyReport verify_properties(const CoveringInstance& instance,
                                 const Decomposition& decomposition, const Rational& alpha,
                                 double gamma, const ExactCostOracle& exact);

// ---------------------------------------------------------------------------
// Text format, one layer per line:
//   layer <i> cost <num/den> requests <id...> items <item id...>

std::string dump_decomposition(const CoveringInstance& instance,
                               const Decomposition& decomposition);
void write_decomposition(std::ostream& out, const CoveringInstance& instance,
                         const Decomposition& decomposition);
// Throws ice::ParseError on malformed lines, unknown items or a cost that
// disagrees with the listed items.
Decomposition read_decomposition(std::istream& in, const CoveringInstance& instance);

}  // namespace ice

#endif  // ICE_DECOMP_DECOMPOSITION_BUILDER_H_
