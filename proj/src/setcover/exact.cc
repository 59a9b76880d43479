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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ice/setcover/oracles.h"

namespace ice::setcover {
namespace {

constexpr int kRootIterations = 120;
constexpr int kNodeIterations = 15;

// Partial cover restricted to one residual; elements are renumbered 0..R-1.
//
// Branches on the live element with the fewest available sets: cover it with
// each of them in turn (earlier ones excluded), or leave it uncovered. Nodes
// are pruned with a fractional knapsack bound over marginal gains and with a
// Lagrangian bound (coverage constraints relaxed, multipliers by
// subgradient steps warm-started from the parent), both rounded up to the
// cost grid. The Lagrangian reduced costs also rule out sets locally.
class BranchAndBound {
 public:
  BranchAndBound(const SetCoverInstance& instance, const RequestSet& residual, int target,
                 int64_t node_limit)
      : instance_(instance), target_(target), node_limit_(node_limit) {
    const std::size_t r = residual.size();
    std::vector<int> local(static_cast<std::size_t>(instance.n_elements()) + 1, -1);
    for (std::size_t p = 0; p < r; ++p) local[static_cast<std::size_t>(residual[p])] = static_cast<int>(p);

    std::vector<ItemIndex> ids;
    std::vector<Bitset> masks;
    for (ItemIndex s = 0; s < instance.n_sets(); ++s) {
      Bitset m(r);
      bool any = false;
      for (RequestId e : instance.item_covers(s)) {
        const int l = local[static_cast<std::size_t>(e)];
        if (l >= 0) {
          m.set(static_cast<std::size_t>(l));
          any = true;
        }
      }
      if (any) {
        ids.push_back(s);
        masks.push_back(std::move(m));
      }
    }
    // Drop sets contained in a set that is no more expensive.
    std::vector<char> keep(ids.size(), 1);
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = 0; b < ids.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (masks[a].count_andnot(masks[b]) != 0) continue;  // a not inside b
        const Rational& ca = instance.item_cost(ids[a]);
        const Rational& cb = instance.item_cost(ids[b]);
        const bool same = masks[b].count_andnot(masks[a]) == 0;
        if (cb < ca || (cb == ca && (!same || b < a))) keep[a] = 0;
      }
    }
    covered_ = Bitset(r);
    for (std::size_t a = 0; a < ids.size(); ++a) {
      if (!keep[a]) continue;
      const Rational& c = instance.item_cost(ids[a]);
      if (c.is_zero()) {
        // Free sets never hurt.
        count_ += masks[a].count_andnot(covered_);
        covered_ |= masks[a];
        chosen_.push_back(ids[a]);
        continue;
      }
      LocalSet s{ids[a], c, c.to_double(), std::move(masks[a]), {}};
      s.members.for_each([&](std::size_t e) { s.elements.push_back(static_cast<int>(e)); });
      sets_.push_back(std::move(s));
      step_ = step_.is_zero() ? c : rational_gcd(step_, c);
    }
    containing_.assign(r, {});
    for (std::size_t k = 0; k < sets_.size(); ++k) {
      for (int e : sets_[k].elements) containing_[static_cast<std::size_t>(e)].push_back(static_cast<int>(k));
    }
    avail_.assign(sets_.size(), 1);
  }

  PartialSolution solve() {
    seed_incumbent();
    root_bound_ = cost_;
    root_ = true;
    search(initial_multipliers());
    return PartialSolution::from_items(instance_, best_items_);
  }

  // The bound the search would start from, without branching.
  Rational root_lower_bound() {
    seed_incumbent();
    const int need = target_ - static_cast<int>(count_);
    if (need <= 0) return cost_;
    const auto kb = knapsack_bound(need);
    if (!kb) throw InfeasibleError("cover target cannot be reached");
    Rational lb = *kb;
    if (!step_.is_zero()) {
      std::vector<double> u = initial_multipliers();
      std::vector<double> reduced;
      lb = std::max(lb, on_grid(lagrangian(u, need, (best_cost_ - cost_).to_double(),
                                           kRootIterations, reduced)));
    }
    return std::min(best_cost_, cost_ + lb);
  }

 private:
  // Cheapest per-element price of any set containing the element.
  std::vector<double> initial_multipliers() const {
    std::vector<double> u(containing_.size(), 0.0);
    for (std::size_t e = 0; e < containing_.size(); ++e) {
      double best = 0.0;
      for (int k : containing_[e]) {
        const LocalSet& s = sets_[static_cast<std::size_t>(k)];
        const double v = s.costd / static_cast<double>(s.elements.size());
        if (best == 0.0 || v < best) best = v;
      }
      u[e] = best;
    }
    return u;
  }

  struct LocalSet {
    ItemIndex item;
    Rational cost;
    double costd;
    Bitset members;
    std::vector<int> elements;
  };

  // Ratio greedy on capped gains until the target is met.
  void seed_incumbent() {
    Bitset covered = covered_;
    std::size_t count = count_;
    std::vector<ItemIndex> items = chosen_;
    Rational cost;
    std::vector<char> used(sets_.size(), 0);
    while (static_cast<int>(count) < target_) {
      const auto need = static_cast<std::size_t>(target_) - count;
      int best = -1;
      std::size_t best_gain = 0;
      for (std::size_t k = 0; k < sets_.size(); ++k) {
        if (used[k]) continue;
        const std::size_t g = std::min(need, sets_[k].members.count_andnot(covered));
        if (g == 0) continue;
        if (best < 0 || Rational(static_cast<int64_t>(g)) * sets_[static_cast<std::size_t>(best)].cost >
                            Rational(static_cast<int64_t>(best_gain)) * sets_[k].cost) {
          best = static_cast<int>(k);
          best_gain = g;
        }
      }
      if (best < 0) throw InfeasibleError("residual cannot reach the cover target");
      const LocalSet& s = sets_[static_cast<std::size_t>(best)];
      used[static_cast<std::size_t>(best)] = 1;
      count += s.members.count_andnot(covered);
      covered |= s.members;
      cost += s.cost;
      items.push_back(s.item);
    }
    best_cost_ = cost;
    best_items_ = std::move(items);
  }

  // Smallest multiple of the cost grid that is >= lb (up to rounding noise).
  Rational on_grid(double lb) const {
    if (step_.is_zero() || lb <= 0.0) return Rational();
    const double k = std::ceil(lb / step_.to_double() - 1e-7);
    return step_ * Rational(static_cast<int64_t>(std::max(0.0, k)));
  }

  // Fractional knapsack over the marginal gains of available sets.
  // nullopt when the gains cannot reach `need`.
  std::optional<Rational> knapsack_bound(int need) {
    scratch_.clear();
    std::size_t total = 0;
    for (std::size_t k = 0; k < sets_.size(); ++k) {
      if (!avail_[k]) continue;
      const std::size_t g = sets_[k].members.count_andnot(covered_);
      if (g == 0) continue;
      scratch_.push_back({static_cast<int>(k), g});
      total += g;
    }
    if (total < static_cast<std::size_t>(need)) return std::nullopt;
    std::sort(scratch_.begin(), scratch_.end(), [&](const Gain& a, const Gain& b) {
      const Rational lhs = sets_[static_cast<std::size_t>(a.set)].cost * Rational(static_cast<int64_t>(b.gain));
      const Rational rhs = sets_[static_cast<std::size_t>(b.set)].cost * Rational(static_cast<int64_t>(a.gain));
      return lhs != rhs ? lhs < rhs : a.set < b.set;
    });
    Rational lb;
    auto left = static_cast<int64_t>(need);
    for (const Gain& g : scratch_) {
      const auto take = std::min<int64_t>(left, static_cast<int64_t>(g.gain));
      lb += sets_[static_cast<std::size_t>(g.set)].cost * Rational(take, static_cast<int64_t>(g.gain));
      left -= take;
      if (left == 0) break;
    }
    if (step_.is_zero()) return lb;
    return step_ * Rational((lb / step_).ceil());
  }

  // Lagrangian bound  sum of the `need` smallest u_e over live elements
  //                 + sum over available sets of min(0, c_S - u(S)).
  // Improves u in place; fills `reduced` with c_S - u(S) at the best u.
  double lagrangian(std::vector<double>& u, int need, double budget, int iterations,
                    std::vector<double>& reduced) {
    live_.clear();
    for (std::size_t e = 0; e < containing_.size(); ++e) {
      if (covered_.test(e)) continue;
      for (int k : containing_[e]) {
        if (avail_[static_cast<std::size_t>(k)]) {
          live_.push_back(static_cast<int>(e));
          break;
        }
      }
    }
    std::vector<double> r(sets_.size(), 0.0);
    std::vector<int> hits(containing_.size(), 0);
    std::vector<char> picked(containing_.size(), 0);
    std::vector<double> best_u = u;
    double best = -1e300;
    double theta = 2.0;
    int stale = 0;
    for (int it = 0; it < iterations; ++it) {
      double value = 0.0;
      std::fill(hits.begin(), hits.end(), 0);
      for (std::size_t k = 0; k < sets_.size(); ++k) {
        if (!avail_[k]) continue;
        double rc = sets_[k].costd;
        for (int e : sets_[k].elements) {
          if (!covered_.test(static_cast<std::size_t>(e))) rc -= u[static_cast<std::size_t>(e)];
        }
        r[k] = rc;
        if (rc < 0.0) {
          value += rc;
          for (int e : sets_[k].elements) ++hits[static_cast<std::size_t>(e)];
        }
      }
      order_ = live_;
      const auto cut = order_.begin() + need;
      std::nth_element(order_.begin(), cut - 1, order_.end(), [&](int a, int b) {
        return u[static_cast<std::size_t>(a)] < u[static_cast<std::size_t>(b)];
      });
      for (int e : live_) picked[static_cast<std::size_t>(e)] = 0;
      for (auto p = order_.begin(); p != cut; ++p) {
        picked[static_cast<std::size_t>(*p)] = 1;
        value += u[static_cast<std::size_t>(*p)];
      }
      if (value > best + 1e-12) {
        best = value;
        best_u = u;
        reduced = r;
        stale = 0;
      } else if (++stale >= 4) {
        theta /= 2.0;
        stale = 0;
      }
      if (value >= budget) break;
      double norm = 0.0;
      for (int e : live_) {
        const double g = picked[static_cast<std::size_t>(e)] - hits[static_cast<std::size_t>(e)];
        norm += g * g;
      }
      if (norm == 0.0) break;
      const double step = theta * (budget - value) / norm;
      for (int e : live_) {
        const auto i = static_cast<std::size_t>(e);
        u[i] = std::max(0.0, u[i] + step * (picked[i] - hits[i]));
      }
    }
    u = std::move(best_u);
    return best;
  }

  void search(std::vector<double> u) {
    if (++nodes_ > node_limit_) {
      throw NodeLimitError(PartialSolution::from_items(instance_, best_items_), root_bound_);
    }
    const int need = target_ - static_cast<int>(count_);
    if (need <= 0) {
      if (cost_ < best_cost_) {
        best_cost_ = cost_;
        best_items_ = chosen_;
      }
      return;
    }
    const auto kb = knapsack_bound(need);
    if (!kb) return;
    const Rational room = best_cost_ - cost_;  // completions must cost less
    if (*kb >= room) return;

    std::vector<int> fixed;
    Rational lb = *kb;
    if (!step_.is_zero()) {
      std::vector<double> reduced;
      const double lag = lagrangian(u, need, room.to_double(),
                                    root_ ? kRootIterations : kNodeIterations, reduced);
      lb = std::max(lb, on_grid(lag));
      if (root_) {
        root_bound_ = cost_ + lb;
        root_ = false;
      }
      if (lb >= room) return;
      for (std::size_t k = 0; k < sets_.size(); ++k) {
        if (avail_[k] && reduced[k] > 0.0 && on_grid(lag + reduced[k]) >= room) {
          avail_[k] = 0;
          fixed.push_back(static_cast<int>(k));
        }
      }
    } else if (root_) {
      root_bound_ = cost_ + lb;
      root_ = false;
    }

    // Branch on the live element with the fewest available sets.
    int pivot = -1;
    std::size_t fewest = 0;
    for (std::size_t e = 0; e < containing_.size(); ++e) {
      if (covered_.test(e)) continue;
      std::size_t n = 0;
      for (int k : containing_[e]) n += avail_[static_cast<std::size_t>(k)];
      if (n == 0) continue;
      if (pivot < 0 || n < fewest) {
        pivot = static_cast<int>(e);
        fewest = n;
      }
    }

    if (pivot >= 0) {
      std::vector<std::pair<int, std::size_t>> options;
      for (int k : containing_[static_cast<std::size_t>(pivot)]) {
        if (avail_[static_cast<std::size_t>(k)]) {
          options.emplace_back(k, sets_[static_cast<std::size_t>(k)].members.count_andnot(covered_));
        }
      }
      std::sort(options.begin(), options.end(), [&](const auto& a, const auto& b) {
        const Rational lhs = sets_[static_cast<std::size_t>(a.first)].cost * Rational(static_cast<int64_t>(b.second));
        const Rational rhs = sets_[static_cast<std::size_t>(b.first)].cost * Rational(static_cast<int64_t>(a.second));
        return lhs != rhs ? lhs < rhs : a.first < b.first;
      });
      // Cover the pivot with options[i] while options[0..i) stay out; the
      // last branch leaves the pivot uncovered.
      for (const auto& [k, gain] : options) {
        const LocalSet& s = sets_[static_cast<std::size_t>(k)];
        const Bitset saved = covered_;
        const std::size_t saved_count = count_;
        avail_[static_cast<std::size_t>(k)] = 0;
        count_ += gain;
        covered_ |= s.members;
        cost_ += s.cost;
        chosen_.push_back(s.item);
        search(u);
        chosen_.pop_back();
        cost_ -= s.cost;
        covered_ = saved;
        count_ = saved_count;
      }
      search(u);
      for (const auto& option : options) avail_[static_cast<std::size_t>(option.first)] = 1;
    }
    for (int k : fixed) avail_[static_cast<std::size_t>(k)] = 1;
  }

  struct Gain {
    int set;
    std::size_t gain;
  };

  const SetCoverInstance& instance_;
  int target_;
  int64_t node_limit_;
  int64_t nodes_ = 0;
  bool root_ = true;

  std::vector<LocalSet> sets_;
  std::vector<std::vector<int>> containing_;
  Rational step_;

  Bitset covered_;
  std::size_t count_ = 0;
  std::vector<char> avail_;
  Rational cost_;
  std::vector<ItemIndex> chosen_;

  Rational best_cost_;
  std::vector<ItemIndex> best_items_;
  Rational root_bound_;
  std::vector<Gain> scratch_;
  std::vector<int> live_;
  std::vector<int> order_;
};

}  // namespace

PartialSolution exact_partial_cover(const SetCoverInstance& instance,
                                    const RequestSet& residual, int i,
                                    const ExactOptions& options) {
  if (i <= 0) return {};
  if (i > static_cast<int>(residual.size())) {
    throw DomainError("cover target " + std::to_string(i) + " exceeds the residual size " +
                      std::to_string(residual.size()));
  }
  BranchAndBound bb(instance, residual, i, options.node_limit);
  return bb.solve();
}

Rational exact_lower_bound(const SetCoverInstance& instance, const RequestSet& residual, int i) {
  if (i <= 0) return Rational();
  if (i > static_cast<int>(residual.size())) {
    throw DomainError("cover target " + std::to_string(i) + " exceeds the residual size " +
                      std::to_string(residual.size()));
  }
  BranchAndBound bb(instance, residual, i, 0);
  return bb.root_lower_bound();
}

OracleSpec exact_oracle_spec(const SetCoverInstance& instance, const ExactOptions& options) {
  OracleSpec spec;
  spec.name = "exact";
  spec.alpha = Rational(1);
  spec.gamma = 1.0;
  spec.oracle = [&instance, options](const RequestSet& residual, int i) {
    return exact_partial_cover(instance, residual, i, options);
  };
  return spec;
}

}  // namespace ice::setcover
