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
#include <climits>
#include <cstdint>
#include <cmath>
#include <map>
#include <numeric>

#include "ice/setcover/oracles.h"

namespace ice::setcover {
namespace {

// Greedy state over the sets touching one residual. Sets are addressed by
// their position k in relevant(); each keeps its members restricted to the
// residual, and costs are scaled to integers by the common denominator.
class Coverage {
 public:
  Coverage(const SetCoverInstance& instance, const RequestSet& residual)
      : instance_(instance) {
    const Bitset res = instance.to_bits(residual);
    const Bitset none(res.size());
    words_ = res.num_words();
    for (ItemIndex s = 0; s < instance.n_sets(); ++s) {
      if (instance.members(s).count_and_andnot(res, none) == 0) continue;
      relevant_.push_back(s);
      Bitset m = instance.members(s);
      m &= res;
      masked_.insert(masked_.end(), m.data(), m.data() + words_);
    }
    int64_t den = 1;
    for (ItemIndex s : relevant_) {
      const int64_t d = instance.item_cost(s).den();
      den = (Rational(den) * Rational(d) / Rational(std::gcd(den, d))).num();
    }
    scale_ = Rational(den);
    for (ItemIndex s : relevant_) units_.push_back((instance.item_cost(s) * scale_).num());
    for (int64_t u : units_) small_ = small_ && u < (int64_t{1} << 31);
  }

  std::size_t size() const { return relevant_.size(); }
  ItemIndex item(std::size_t k) const { return relevant_[k]; }
  int64_t units(std::size_t k) const { return units_[k]; }
  // Largest integer number of cost units within the budget.
  int64_t budget_units(const Rational& budget) const { return (budget * scale_).floor(); }

  struct Pick {
    std::vector<std::size_t> sets;
    std::vector<uint64_t> covered;
    std::size_t count = 0;
    int64_t cost = 0;  // in units
  };

  Pick start() const { return {{}, std::vector<uint64_t>(words_, 0), 0, 0}; }

  std::size_t gain(std::size_t k, const Pick& p) const {
    return kernels::count_andnot(&masked_[k * words_], p.covered.data(), words_);
  }

  void add(Pick& p, std::size_t k) const {
    p.count += gain(k, p);
    kernels::or_into(p.covered.data(), &masked_[k * words_], words_);
    p.cost += units_[k];
    p.sets.push_back(k);
  }

  // Adds the best gain/cost set that still fits until none does; ratio ties
  // go to the lower index.
  void complete(Pick& p, int64_t budget) const {
    used_.assign(size(), 0);
    for (std::size_t k : p.sets) used_[k] = 1;
    for (;;) {
      std::size_t best = size();
      std::size_t best_gain = 0;
      for (std::size_t k = 0; k < size(); ++k) {
        if (used_[k] || p.cost + units_[k] > budget) continue;
        const std::size_t g = gain(k, p);
        if (g == 0) continue;
        if (best == size() || better_ratio(g, units_[k], best_gain, units_[best])) {
          best = k;
          best_gain = g;
        }
      }
      if (best == size()) return;
      used_[best] = 1;
      add(p, best);
    }
  }

  bool better_ratio(std::size_t ga, int64_t ca, std::size_t gb, int64_t cb) const {
    if (small_) return static_cast<int64_t>(ga) * cb > static_cast<int64_t>(gb) * ca;
    return static_cast<Rational::Wide>(ga) * cb > static_cast<Rational::Wide>(gb) * ca;
  }

  PartialSolution solution(const Pick& p) const {
    std::vector<ItemIndex> items;
    for (std::size_t k : p.sets) items.push_back(relevant_[k]);
    return PartialSolution::from_items(instance_, std::move(items));
  }

 private:
  const SetCoverInstance& instance_;
  std::size_t words_ = 0;
  std::vector<ItemIndex> relevant_;
  std::vector<uint64_t> masked_;
  Rational scale_;
  std::vector<int64_t> units_;
  bool small_ = true;
  mutable std::vector<char> used_;
};

bool better_pick(const Coverage::Pick& a, const Coverage::Pick& b) {
  if (a.count != b.count) return a.count > b.count;
  return a.cost < b.cost;
}

Coverage::Pick plain(const Coverage& cov, int64_t budget) {
  Coverage::Pick greedy = cov.start();
  cov.complete(greedy, budget);
  Coverage::Pick best_single = cov.start();
  for (std::size_t k = 0; k < cov.size(); ++k) {
    if (cov.units(k) > budget) continue;
    Coverage::Pick single = cov.start();
    cov.add(single, k);
    if (better_pick(single, best_single)) best_single = std::move(single);
  }
  return better_pick(best_single, greedy) ? best_single : greedy;
}

}  // namespace

BmcVariant resolve_variant(const SetCoverInstance& instance, BmcVariant variant) {
  if (variant != BmcVariant::kAuto) return variant;
  return instance.n_sets() <= kSeeded3MaxSets ? BmcVariant::kSeeded3 : BmcVariant::kPlain;
}

namespace {

// Best pick over the plain greedy and, for seeded3, every seed of at most
// three sets completed greedily. With a target, stops at the first pick
// covering that many.
Coverage::Pick best_pick(const Coverage& cov, int64_t units, BmcVariant variant,
                         std::size_t target = SIZE_MAX) {
  Coverage::Pick best = plain(cov, units);
  if (variant == BmcVariant::kPlain || best.count >= target) return best;

  const std::size_t m = cov.size();
  auto try_seed = [&](Coverage::Pick seed) {
    cov.complete(seed, units);
    if (better_pick(seed, best)) best = std::move(seed);
    return best.count >= target;
  };
  for (std::size_t a = 0; a < m; ++a) {
    Coverage::Pick pa = cov.start();
    cov.add(pa, a);
    if (pa.cost > units) continue;
    if (try_seed(pa)) return best;
    for (std::size_t b = a + 1; b < m; ++b) {
      Coverage::Pick pb = pa;
      cov.add(pb, b);
      if (pb.cost > units) continue;
      if (try_seed(pb)) return best;
      for (std::size_t c = b + 1; c < m; ++c) {
        Coverage::Pick pc = pb;
        cov.add(pc, c);
        if (pc.cost > units) continue;
        if (try_seed(std::move(pc))) return best;
      }
    }
  }
  return best;
}

}  // namespace

PartialSolution bmc_greedy(const SetCoverInstance& instance, const RequestSet& residual,
                           const Rational& budget, BmcVariant variant) {
  const Coverage cov(instance, residual);
  return cov.solution(
      best_pick(cov, cov.budget_units(budget), resolve_variant(instance, variant)));
}

PartialSolution partial_cover_oracle(const SetCoverInstance& instance,
                                     const RequestSet& residual, int i, BmcVariant variant) {
  if (i < 1 || i > static_cast<int>(residual.size())) {
    throw DomainError("cover target " + std::to_string(i) + " outside 1.." +
                      std::to_string(residual.size()));
  }
  const int target =
      static_cast<int>(std::ceil(static_cast<double>(i) / kBmcGamma - 1e-12));
  auto enough = [&](const PartialSolution& s) {
    return static_cast<int>(s.num_covered_in(residual)) >= target;
  };

  variant = resolve_variant(instance, variant);
  const Coverage cov(instance, residual);
  Rational total;
  Rational step;
  for (std::size_t k = 0; k < cov.size(); ++k) {
    const Rational& c = instance.item_cost(cov.item(k));
    total += c;
    if (c > Rational()) step = step.is_zero() ? c : rational_gcd(step, c);
  }
  // Whether some greedy pick within k steps of the grid reaches the target;
  // the search only needs this, the full comparison runs once at the end.
  std::map<int64_t, bool> tried;
  auto reaches = [&](int64_t k) {
    auto it = tried.find(k);
    if (it == tried.end()) {
      const int64_t units = step.is_zero() ? 0 : cov.budget_units(step * Rational(k));
      it = tried.emplace(k, best_pick(cov, units, variant, static_cast<std::size_t>(target))
                                    .count >= static_cast<std::size_t>(target))
               .first;
    }
    return it->second;
  };
  auto answer = [&](int64_t k) {
    PartialSolution s = bmc_greedy(instance, residual, step * Rational(k), variant);
    if (!enough(s)) throw ContractViolation("greedy answer lost the coverage target");
    return s;
  };

  if (reaches(0)) return answer(0);
  if (step.is_zero()) throw ContractViolation("free sets do not reach the coverage target");
  // Every budget at or above the optimum for i succeeds, so the first success
  // after a failure sits at or below that optimum.
  int64_t lo = 1;
  int64_t hi = (total / step).floor();
  if (!reaches(hi)) {
    throw ContractViolation("greedy misses the coverage target even with every set");
  }
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (reaches(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return answer(hi);
}

PartialSolution greedy_cover(const SetCoverInstance& instance, const RequestSet& requests) {
  const Coverage cov(instance, requests);
  Coverage::Pick p = cov.start();
  cov.complete(p, INT64_MAX / 2);
  if (p.count < requests.size()) throw InfeasibleError("requests cannot be covered");
  return cov.solution(p);
}

OracleSpec bmc_oracle_spec(const SetCoverInstance& instance, BmcVariant variant) {
  OracleSpec spec;
  spec.name = "bmc";
  spec.alpha = Rational(1);
  spec.gamma = kBmcGamma;
  spec.oracle = [&instance, variant](const RequestSet& residual, int i) {
    return partial_cover_oracle(instance, residual, i, variant);
  };
  return spec;
}

}  // namespace ice::setcover
