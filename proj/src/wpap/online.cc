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

#include "ice/core/errors.h"
#include "ice/core/random.h"
#include "ice/wpap/wpap.h"

namespace ice::wpap {
namespace {

bool covered_by(const WpapInstance& inst, const std::vector<char>& bought, RequestId e) {
  for (ItemIndex l : inst.items_covering(e)) {
    if (bought[static_cast<std::size_t>(l)]) return true;
  }
  return false;
}

ItemIndex lowest_class(const LaminarInstance& lam, std::span<const ItemIndex> links) {
  ItemIndex best = links.front();
  for (ItemIndex l : links) {
    if (lam.cls[static_cast<std::size_t>(l)] < lam.cls[static_cast<std::size_t>(best)]) best = l;
  }
  return best;
}

}  // namespace

LaminarDeterministic::LaminarDeterministic(const LaminarInstance& instance)
    : lam_(instance),
      bought_(static_cast<std::size_t>(instance.laminar.num_links()), 0),
      charged_(static_cast<std::size_t>(instance.laminar.num_links())),
      containers_(static_cast<std::size_t>(instance.laminar.num_links())) {
  const auto& links = instance.laminar.links();
  for (std::size_t i = 0; i < links.size(); ++i) {
    for (std::size_t j = 0; j < links.size(); ++j) {
      if (i == j || instance.cls[j] <= instance.cls[i]) continue;
      if (links[j].a <= links[i].a && links[i].b <= links[j].b) {
        containers_[i].push_back(static_cast<ItemIndex>(j));
      }
    }
  }
}

void LaminarDeterministic::buy(ItemIndex l, StepResult& out) {
  bought_[static_cast<std::size_t>(l)] = 1;
  out.bought.push_back(l);
  const Rational& cost = lam_.laminar.item_cost(l);
  out.cost += cost;
  for (ItemIndex c : containers_[static_cast<std::size_t>(l)]) {
    if (bought_[static_cast<std::size_t>(c)]) continue;
    charged_[static_cast<std::size_t>(c)] += cost;
    if (charged_[static_cast<std::size_t>(c)] >= lam_.laminar.item_cost(c)) buy(c, out);
  }
}

StepResult LaminarDeterministic::step(RequestId e) {
  const auto links = lam_.laminar.items_covering(e);
  if (links.empty()) throw InfeasibleError("element " + std::to_string(e) + " is in no link");
  StepResult out;
  if (covered_by(lam_.laminar, bought_, e)) return out;
  buy(lowest_class(lam_, links), out);
  std::sort(out.bought.begin(), out.bought.end());
  return out;
}

LaminarRandomized::LaminarRandomized(const LaminarInstance& instance, double tau)
    : lam_(instance),
      tau_(tau),
      x_(static_cast<std::size_t>(instance.laminar.num_links()), 0.0),
      bought_(static_cast<std::size_t>(instance.laminar.num_links()), 0) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("tau must lie in [0, 1]");
}

StepResult LaminarRandomized::step(RequestId e) {
  const auto span = lam_.laminar.items_covering(e);
  if (span.empty()) throw InfeasibleError("element " + std::to_string(e) + " is in no link");
  std::vector<ItemIndex> links(span.begin(), span.end());
  // Dearest class first.
  std::sort(links.begin(), links.end(), [&](ItemIndex a, ItemIndex b) {
    return lam_.cls[static_cast<std::size_t>(a)] > lam_.cls[static_cast<std::size_t>(b)];
  });

  const double d = static_cast<double>(links.size());
  auto mass = [&] {
    double sum = 0.0;
    for (ItemIndex l : links) sum += x_[static_cast<std::size_t>(l)];
    return sum;
  };
  while (mass() < 1.0) {
    for (ItemIndex l : links) {
      const double c = lam_.laminar.item_cost(l).to_double();
      double& xl = x_[static_cast<std::size_t>(l)];
      const double next = xl * (1.0 + 1.0 / c) + 1.0 / (d * c);
      fractional_cost_ += c * (next - xl);
      xl = next;
    }
  }

  StepResult out;
  auto buy = [&](ItemIndex l) {
    if (bought_[static_cast<std::size_t>(l)]) return;
    bought_[static_cast<std::size_t>(l)] = 1;
    out.bought.push_back(l);
    out.cost += lam_.laminar.item_cost(l);
  };
  double above = 0.0;  // sum over strictly dearer classes
  bool picked = false;
  for (ItemIndex l : links) {
    const double upto = above + x_[static_cast<std::size_t>(l)];
    if (above < tau_ && tau_ <= upto) {
      buy(l);
      picked = true;
      break;
    }
    above = upto;
  }
  if (!picked && !covered_by(lam_.laminar, bought_, e)) buy(lowest_class(lam_, span));
  std::sort(out.bought.begin(), out.bought.end());
  return out;
}

namespace {

// Runs a laminar algorithm and reports purchases as original links.
template <typename Inner>
class Translated : public OnlineAlgorithm {
 public:
  Translated(const WpapInstance& original, std::shared_ptr<const LaminarInstance> lam,
             Inner inner, TieBreakHint hint)
      : original_(original),
        lam_(std::move(lam)),
        inner_(std::move(inner)),
        hint_(std::move(hint)),
        owned_(static_cast<std::size_t>(original.num_links()), 0) {}

  StepResult step(RequestId e) override {
    const StepResult lam_step = inner_.step(e);
    StepResult out;
    auto take = [&](ItemIndex l) {
      if (owned_[static_cast<std::size_t>(l)]) return;
      owned_[static_cast<std::size_t>(l)] = 1;
      out.bought.push_back(l);
      out.cost += original_.item_cost(l);
    };
    for (ItemIndex l : lam_step.bought) {
      for (ItemIndex o : lam_->provenance[static_cast<std::size_t>(l)]) take(o);
    }
    if (!covered_by(original_, owned_, e)) {
      take(pick_cheapest(original_, original_.items_covering(e), hint_));
    }
    std::sort(out.bought.begin(), out.bought.end());
    return out;
  }

 private:
  const WpapInstance& original_;
  std::shared_ptr<const LaminarInstance> lam_;
  Inner inner_;
  TieBreakHint hint_;
  std::vector<char> owned_;
};

}  // namespace

WpapAdapter::WpapAdapter(const WpapInstance& instance, OnlineRule rule, int classes_cap)
    : instance_(instance),
      rule_(rule),
      lam_(std::make_shared<const LaminarInstance>(
          laminarize(instance, std::max(instance.total_cost(), Rational(1)), classes_cap))) {}

std::unique_ptr<OnlineAlgorithm> WpapAdapter::create(uint64_t seed,
                                                     const TieBreakHint& hint) const {
  if (rule_ == OnlineRule::kDeterministic) {
    return std::make_unique<Translated<LaminarDeterministic>>(
        instance_, lam_, LaminarDeterministic(*lam_), hint);
  }
  Rng rng(seed);
  return std::make_unique<Translated<LaminarRandomized>>(
      instance_, lam_, LaminarRandomized(*lam_, rng.uniform01()), hint);
}

std::string WpapAdapter::name() const {
  return rule_ == OnlineRule::kDeterministic ? "wpap-deterministic" : "wpap-randomized";
}

}  // namespace ice::wpap
