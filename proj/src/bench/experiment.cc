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
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "ice/bench/bench.h"
#include "ice/core/errors.h"
#include "ice/core/ice.h"
#include "ice/core/random.h"
#include "ice/setcover/instance.h"
#include "ice/setcover/online.h"

namespace ice::bench {
namespace {

using Clock = std::chrono::steady_clock;

// Seed streams within one (instance, seed) cell.
enum Stream : uint64_t { kPredictionStream = 1, kPerturbStream = 2, kRunStream = 3 };

struct Source {
  std::string id;
  std::function<setcover::SetCoverInstance()> load;
};

std::vector<Source> sources(const ExperimentConfig& config) {
  std::vector<Source> out;
  if (!config.pace_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(config.pace_dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      out.push_back({path.filename().string(), [path] {
                       std::ifstream in(path);
                       if (!in) throw ConfigError("cannot open " + path.string());
                       return setcover::load_pace(in);
                     }});
    }
    return out;
  }
  const RandomSpec spec = config.random;
  for (int i = 0; i < spec.instances; ++i) {
    out.push_back({std::to_string(i), [spec, i] {
                     return setcover::gen_random(static_cast<uint64_t>(i), spec.n_elements,
                                                 spec.n_sets, spec.set_size);
                   }});
  }
  return out;
}

// FNV-1a, stable across platforms.
uint64_t stable_hash(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Optimum {
  Rational value;
  bool bound = false;
};

Optimum offline_optimum(const setcover::SetCoverInstance& instance, const RequestSet& x,
                        setcover::ExactOptions options, bool over_cap) {
  if (over_cap) {
    return {setcover::exact_lower_bound(instance, x, static_cast<int>(x.size())), true};
  }
  try {
    return {setcover::exact_partial_cover(instance, x, static_cast<int>(x.size()), options).cost,
            false};
  } catch (const setcover::NodeLimitError& e) {
    return {e.lower_bound(), true};
  }
}

std::string bmc_kind(const setcover::SetCoverInstance& instance, setcover::BmcVariant v) {
  v = setcover::resolve_variant(instance, v);
  return v == setcover::BmcVariant::kPlain ? "bmc-plain" : "bmc-seeded3";
}

std::vector<ExperimentRow> run_cell(const ExperimentConfig& config, const Source& source,
                                    uint64_t seed) {
  const setcover::SetCoverInstance instance = source.load();
  const uint64_t cell = derive_seed(seed, stable_hash(source.id));
  const PredictionSplit split =
      make_prediction(instance, derive_seed(cell, kPredictionStream), config.prediction_fraction);
  const setcover::FractionalCoverAdapter adapter(instance);
  const bool over_cap =
      (config.cap_elements > 0 && instance.n_elements() > config.cap_elements) ||
      (config.cap_items > 0 && instance.n_sets() > config.cap_items);

  auto wants = [&](Algorithm a) {
    return std::find(config.algorithms.begin(), config.algorithms.end(), a) !=
           config.algorithms.end();
  };

  // Decompositions depend on the prediction only, not on alpha.
  struct Prepared {
    Algorithm algorithm;
    Decomposition decomposition;
    std::string kind;
    std::string error;
  };
  std::vector<Prepared> ice;
  auto prepare = [&](Algorithm a, const OracleSpec& spec, std::string kind) {
    Prepared p{a, {}, std::move(kind), {}};
    if (over_cap && a == Algorithm::kIceExact) {
      p.error = "instance exceeds the exact oracle caps";
      ice.push_back(std::move(p));
      return;
    }
    try {
      p.decomposition = build_decomposition(instance, split.predicted, spec);
    } catch (const Error& e) {
      p.error = e.what();
    }
    ice.push_back(std::move(p));
  };
  if (wants(Algorithm::kIceExact)) {
    prepare(Algorithm::kIceExact, setcover::exact_oracle_spec(instance, config.exact), "exact");
  }
  if (wants(Algorithm::kIceApprox)) {
    prepare(Algorithm::kIceApprox, setcover::bmc_oracle_spec(instance, config.bmc_variant),
            bmc_kind(instance, config.bmc_variant));
  }

  IceOptions options;
  options.seed = derive_seed(cell, kRunStream);
  options.skip_covered = config.skip_covered;
  IceOptions plain_options = options;
  plain_options.decomposition_tie_break = false;

  const uint64_t perturb_seed = derive_seed(cell, kPerturbStream);
  struct Measured {
    Rational cost;
    double ms = 0.0;
  };
  auto run_classical = [&](const ArrivalSet& arrivals) {
    const auto start = Clock::now();
    const IceTrace t = run_plain(instance, adapter, arrivals.order, plain_options);
    return Measured{t.solution_cost, elapsed_ms(start)};
  };
  // Classical ignores the prediction, so its row (cost and optimum) is the
  // one measured on the unperturbed arrivals.
  std::optional<std::pair<Measured, Optimum>> classical_fixed;
  if (wants(Algorithm::kClassical) && !config.classical_per_alpha) {
    const ArrivalSet unperturbed = perturb(split.predicted, split.pool, Rational(), perturb_seed);
    classical_fixed.emplace(run_classical(unperturbed),
                            offline_optimum(instance, unperturbed.actual, config.exact, over_cap));
  }

  std::vector<ExperimentRow> rows;
  for (const Rational& alpha : config.alpha_grid) {
    const ArrivalSet arrivals = perturb(split.predicted, split.pool, alpha, perturb_seed);
    const Optimum opt = offline_optimum(instance, arrivals.actual, config.exact, over_cap);

    ExperimentRow base;
    base.dataset = config.dataset;
    base.instance_id = source.id;
    base.seed = seed;
    base.alpha = alpha.to_double();
    base.eta = prediction_error(arrivals.actual, split.predicted);
    base.eta_norm = split.predicted.empty()
                        ? 0.0
                        : static_cast<double>(base.eta) / static_cast<double>(split.predicted.size());

    auto emit = [&](Algorithm a, const Rational& cost, double ms, std::string kind,
                    const Optimum& against) {
      ExperimentRow row = base;
      row.algorithm = algorithm_name(a);
      row.cost = cost.to_double();
      row.opt = against.value.to_double();
      row.ratio = against.value.is_zero() ? 1.0 : (cost / against.value).to_double();
      row.runtime_ms = config.record_runtime ? ms : 0.0;
      row.oracle_kind = std::move(kind) + (against.bound ? kBoundSuffix : "");
      rows.push_back(std::move(row));
    };

    for (Algorithm a : config.algorithms) {
      switch (a) {
        case Algorithm::kClassical: {
          if (classical_fixed) {
            emit(a, classical_fixed->first.cost, classical_fixed->first.ms, "none",
                 classical_fixed->second);
          } else {
            const Measured m = run_classical(arrivals);
            emit(a, m.cost, m.ms, "none", opt);
          }
          break;
        }
        case Algorithm::kOfflineGreedy: {
          const auto start = Clock::now();
          const PartialSolution g = setcover::greedy_cover(instance, arrivals.actual);
          emit(a, g.cost, elapsed_ms(start), "none", opt);
          break;
        }
        case Algorithm::kIceExact:
        case Algorithm::kIceApprox: {
          const auto p = std::find_if(ice.begin(), ice.end(),
                                      [&](const Prepared& x) { return x.algorithm == a; });
          if (!p->error.empty()) {
            emit(a, Rational(), 0.0, p->kind + "+failed", opt);
            rows.back().ratio = 0.0;
            break;
          }
          const auto start = Clock::now();
          const IceTrace t = ice_run(instance, split.predicted, p->decomposition, adapter,
                                     arrivals.order, options);
          emit(a, t.solution_cost, elapsed_ms(start), p->kind, opt);
          break;
        }
      }
    }
  }
  return rows;
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kClassical:
      return "classical";
    case Algorithm::kIceExact:
      return "ice_exact";
    case Algorithm::kIceApprox:
      return "ice_approx";
    case Algorithm::kOfflineGreedy:
      return "offline_greedy";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kClassical, Algorithm::kIceExact, Algorithm::kIceApprox,
                      Algorithm::kOfflineGreedy}) {
    if (algorithm_name(a) == name) return a;
  }
  throw ConfigError("unknown algorithm '" + name + "'");
}

ExperimentConfig desk_config() {
  ExperimentConfig c;
  c.dataset = "random";
  c.random = {200, 40, 20, 20};
  for (int k = 0; k <= 7; ++k) c.alpha_grid.emplace_back(k, 20);
  return c;
}

std::vector<ExperimentRow> run_experiment(
    const ExperimentConfig& config, const std::function<void(const ExperimentRow&)>& sink) {
  const std::vector<Source> src = sources(config);
  struct Cell {
    const Source* source;
    uint64_t seed;
  };
  std::vector<Cell> cells;
  for (const Source& s : src) {
    for (uint64_t seed : config.seeds) cells.push_back({&s, seed});
  }

  std::vector<std::optional<std::vector<ExperimentRow>>> done(cells.size());
  std::vector<ExperimentRow> rows;
  std::size_t flushed = 0;
  std::mutex mu;
  auto flush = [&] {
    while (flushed < cells.size() && done[flushed]) {
      for (ExperimentRow& r : *done[flushed]) {
        if (sink) sink(r);
        rows.push_back(std::move(r));
      }
      done[flushed].reset();
      ++flushed;
    }
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        auto result = run_cell(config, *cells[i].source, cells[i].seed);
        std::lock_guard<std::mutex> lock(mu);
        done[i] = std::move(result);
        flush();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace ice::bench
