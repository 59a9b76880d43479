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

#ifndef ICE_WPAP_WPAP_H_
#define ICE_WPAP_WPAP_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "ice/core/covering.h"
#include "ice/core/online.h"
#include "ice/decomp/decomposition_builder.h"

namespace ice::wpap {

struct Link {
  int64_t id = 0;
  int a = 1;  // first element
  int b = 1;  // last element
  Rational cost;
};

// Path elements 1..n and interval links [a, b]. Every element lies in some
// link.
class WpapInstance : public CoveringInstance {
 public:
  WpapInstance() = default;
  // Throws ice::DomainError on bad intervals, negative costs or an element
  // no link contains.
  WpapInstance(int n, std::vector<Link> links);

  int n() const { return num_requests(); }
  int num_links() const { return num_items(); }
  const Link& link(ItemIndex i) const { return links_[static_cast<std::size_t>(i)]; }
  const std::vector<Link>& links() const { return links_; }

 private:
  std::vector<Link> links_;
};

// {"n": int, "links": [{"id": int, "a": int, "b": int, "cost": "num/den"}]}
WpapInstance load_json(std::istream& in);  // throws ice::ParseError
void dump_json(std::ostream& out, const WpapInstance& instance);

// Cheapest cover of j..k by links inside [j, k]; nullopt when impossible.
// k < j gives the empty solution.
std::optional<PartialSolution> interval_cover_cost(const WpapInstance& instance, int j, int k);

// Cheapest solution covering at least i elements of `residual` (all
// elements in the first overload). Throws ice::DomainError unless
// 0 <= i <= |residual|.
PartialSolution dp_partial_cover(const WpapInstance& instance, int i);
PartialSolution dp_partial_cover(const WpapInstance& instance, const RequestSet& residual,
                                 int i);

// Cheapest solution covering every element of `required`. Throws
// ice::InfeasibleError if some required element is in no link.
PartialSolution exact_cover_subset(const WpapInstance& instance, const RequestSet& required);

OracleSpec dp_oracle_spec(const WpapInstance& instance);

// ---------------------------------------------------------------------------
// Laminar form.

// Links of the laminar instance carry cost 4^cls; provenance lists the
// original links a laminar link stands for.
struct LaminarInstance {
  WpapInstance laminar;
  std::vector<int> cls;                         // per laminar link
  std::vector<std::vector<ItemIndex>> provenance;  // original indices, sorted
  Rational floor;                               // smallest class cost allowed

  // Cost of the original links behind a set of laminar links, each counted
  // once.
  PartialSolution to_original(const WpapInstance& original,
                              std::span<const ItemIndex> laminar_items) const;
};

// Every pair of intervals is disjoint or nested.
bool is_laminar(const WpapInstance& instance);
// No element lies in two links of the same class.
bool one_link_per_class(const LaminarInstance& instance);

// Drops links dearer than opt_guess (keeping each element's cheapest link),
// lifts costs below opt_guess / 4^classes_cap to that floor, rounds costs up
// to powers of 4, makes each class a set of disjoint intervals, and extends
// interval ends over crossing cheaper-class links, cheapest class first.
// Throws ice::DomainError when opt_guess <= 0 or classes_cap < 0.
LaminarInstance laminarize(const WpapInstance& instance, const Rational& opt_guess,
                           int classes_cap = 16);

// ---------------------------------------------------------------------------
// Online algorithms on the laminar form. Both report purchases in laminar
// link indices and laminar costs.

class LaminarDeterministic {
 public:
  explicit LaminarDeterministic(const LaminarInstance& instance);
  // Buys the cheapest-class link containing e when e is uncovered; every
  // purchase is charged to the dearer links strictly containing it, which
  // are bought once their charge reaches their cost.
  StepResult step(RequestId e);
  bool purchased(ItemIndex l) const { return bought_[static_cast<std::size_t>(l)] != 0; }

 private:
  void buy(ItemIndex l, StepResult& out);

  const LaminarInstance& lam_;
  std::vector<char> bought_;
  std::vector<Rational> charged_;
  std::vector<std::vector<ItemIndex>> containers_;  // dearer links strictly containing
};

class LaminarRandomized {
 public:
  // tau in [0, 1] is fixed for the whole run.
  LaminarRandomized(const LaminarInstance& instance, double tau);
  // Multiplicative update on the links containing e, then buys the class-i
  // link with sum_{j > i} x_j(e) < tau <= sum_{j >= i} x_j(e); falls back to
  // the cheapest link containing e when that picks nothing.
  StepResult step(RequestId e);
  double x(ItemIndex l) const { return x_[static_cast<std::size_t>(l)]; }
  double fractional_cost() const { return fractional_cost_; }
  bool purchased(ItemIndex l) const { return bought_[static_cast<std::size_t>(l)] != 0; }
  double tau() const { return tau_; }

 private:
  const LaminarInstance& lam_;
  double tau_;
  std::vector<double> x_;
  std::vector<char> bought_;
  double fractional_cost_ = 0.0;
};

enum class OnlineRule { kDeterministic, kRandomized };

// Online adapter over the original instance: laminarizes once with
// opt_guess = total link cost and translates laminar purchases back to
// original links.
class WpapAdapter : public OnlineAdapter {
 public:
  WpapAdapter(const WpapInstance& instance, OnlineRule rule, int classes_cap = 16);
  std::unique_ptr<OnlineAlgorithm> create(uint64_t seed,
                                          const TieBreakHint& hint) const override;
  std::string name() const override;
  const LaminarInstance& laminar() const { return *lam_; }

 private:
  const WpapInstance& instance_;
  OnlineRule rule_;
  std::shared_ptr<const LaminarInstance> lam_;
};

// ---------------------------------------------------------------------------
// Generators.

// For each permit type: aligned windows [1 + t d, min((t + 1) d, horizon)].
// Throws ice::DomainError on mismatched lists or a duration outside
// 1..horizon.
WpapInstance gen_parking_permit(int k, const std::vector<int>& durations,
                                const std::vector<Rational>& costs, int horizon);

struct AdversarialCase {
  WpapInstance instance;
  std::vector<RequestId> arrivals;
};
// Links [1, i] of unit cost for i = 1..k, arrivals 1..k.
AdversarialCase gen_adversarial(int k);

// m random intervals with costs q/4, q in 1..4*max_cost; elements no
// interval reaches get a singleton link.
WpapInstance gen_random_links(uint64_t seed, int n, int m, int max_cost = 4);

}  // namespace ice::wpap

#endif  // ICE_WPAP_WPAP_H_
