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

#ifndef ICE_BENCH_BENCH_H_
#define ICE_BENCH_BENCH_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ice/core/covering.h"
#include "ice/setcover/oracles.h"

namespace ice::bench {

struct PredictionSplit {
  RequestSet predicted;
  RequestSet pool;  // every request not predicted
};

// Uniform sample of floor(fraction * N) requests. Throws ice::DomainError
// unless 0 <= fraction <= 1.
PredictionSplit make_prediction(const CoveringInstance& instance, uint64_t seed,
                                const Rational& fraction);

struct ArrivalSet {
  RequestSet actual;
  std::vector<RequestId> order;  // uniform random permutation of actual
};

// Replaces floor(alpha |predicted|) predicted requests by as many distinct
// pool requests. Throws ice::ConfigError when the pool is too small and
// ice::DomainError unless 0 <= alpha <= 1.
ArrivalSet perturb(const RequestSet& predicted, const RequestSet& pool, const Rational& alpha,
                   uint64_t seed);

// Requests present in more than half of the samples.
RequestSet majority_predictor(const std::vector<RequestSet>& samples);

enum class Algorithm { kClassical, kIceExact, kIceApprox, kOfflineGreedy };
std::string algorithm_name(Algorithm a);       // classical, ice_exact, ...
Algorithm parse_algorithm(const std::string& name);

struct RandomSpec {
  int n_elements = 200;
  int n_sets = 40;
  int set_size = 20;
  int instances = 20;
};

struct ExperimentConfig {
  std::string dataset = "random";
  // Either a random spec or a directory of PACE files.
  RandomSpec random;
  std::string pace_dir;

  Rational prediction_fraction{1, 2};
  std::vector<Rational> alpha_grid;
  std::vector<uint64_t> seeds{0};
  std::vector<Algorithm> algorithms{Algorithm::kClassical, Algorithm::kIceExact,
                                    Algorithm::kIceApprox};
  setcover::ExactOptions exact;
  // Instances with more elements or sets than this (0 = no cap) get no
  // exact decomposition, and their optimum is reported as a bound.
  int cap_elements = 0;
  int cap_items = 0;
  setcover::BmcVariant bmc_variant = setcover::BmcVariant::kAuto;
  bool skip_covered = true;
  // Classical ignores the prediction; by default it is measured once per
  // (instance, seed) on the unperturbed arrivals and repeated for every
  // alpha. Set to run it on each alpha's arrivals instead.
  bool classical_per_alpha = false;
  bool record_runtime = true;
  int threads = 1;
};

// Desk-scale sweep: 200 elements, 40 sets of 20, 20 instances,
// alpha in {0, 0.05, ..., 0.35}.
ExperimentConfig desk_config();

struct ExperimentRow {
  std::string dataset;
  std::string instance_id;
  uint64_t seed = 0;
  double alpha = 0.0;
  int64_t eta = 0;
  double eta_norm = 0.0;
  std::string algorithm;
  double cost = 0.0;
  double opt = 0.0;
  double ratio = 0.0;
  double runtime_ms = 0.0;
  std::string oracle_kind;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

// Rows whose optimum is only a bound carry this suffix in oracle_kind.
inline constexpr const char* kBoundSuffix = "+opt_bound";
bool opt_is_bound(const ExperimentRow& row);

// Runs the sweep; rows come out in (instance, seed, alpha, algorithm) order
// whatever the thread count. `sink`, if set, sees each row as soon as its
// cell is done and in that order.
std::vector<ExperimentRow> run_experiment(
    const ExperimentConfig& config,
    const std::function<void(const ExperimentRow&)>& sink = nullptr);

inline constexpr const char* kCsvHeader =
    "dataset,instance_id,seed,alpha,eta,eta_norm,algorithm,cost,opt,ratio,runtime_ms,"
    "oracle_kind";
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ExperimentRow& row);
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
// Throws ice::ParseError on a wrong header or malformed row.
std::vector<ExperimentRow> read_csv(std::istream& in);

struct SummaryRow {
  std::string dataset;
  std::string algorithm;
  int eta_percent = 0;  // round(100 * eta_norm)
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population
};

// Mean and deviation of the ratio per (dataset, algorithm, eta bucket),
// sorted by those keys. Rows whose optimum is only a bound are skipped.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows);
void write_summary(std::ostream& out, const std::vector<SummaryRow>& summary);

// Rank correlation with average ranks for ties; 0 when either side is
// constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ice::bench

#endif  // ICE_BENCH_BENCH_H_
