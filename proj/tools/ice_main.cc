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

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ice/bench/bench.h"
#include "ice/core/errors.h"
#include "ice/core/ice.h"
#include "ice/core/random.h"
#include "ice/decomp/decomposition_builder.h"
#include "ice/setcover/instance.h"
#include "ice/setcover/online.h"
#include "ice/wpap/wpap.h"

namespace {

using namespace ice;

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// An instance from disk with what each mode needs. JSON with a "links"
// array is a path instance, anything else set cover.
struct Problem {
  std::unique_ptr<setcover::SetCoverInstance> sets;
  std::unique_ptr<wpap::WpapInstance> path;

  const CoveringInstance& instance() const {
    return sets ? static_cast<const CoveringInstance&>(*sets) : *path;
  }
};

Problem load_problem(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  Problem p;
  if (format == "json") {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream is(text);
    if (text.find("\"links\"") != std::string::npos) {
      p.path = std::make_unique<wpap::WpapInstance>(wpap::load_json(is));
    } else {
      p.sets = std::make_unique<setcover::SetCoverInstance>(setcover::load_json(is));
    }
    return p;
  }
  p.sets = std::make_unique<setcover::SetCoverInstance>(
      setcover::load_instance(in, setcover::parse_format(format)));
  return p;
}

std::vector<RequestId> parse_ids(const std::string& text) {
  std::vector<RequestId> ids;
  std::string t = text;
  for (char& c : t) {
    if (c == ',') c = ' ';
  }
  std::istringstream is(t);
  RequestId r = 0;
  while (is >> r) ids.push_back(r);
  if (!is.eof()) throw ConfigError("bad id list '" + text + "'");
  return ids;
}

enum class Mode { kClassical, kIceExact, kIceApprox };

Mode parse_mode(const std::string& m) {
  if (m == "classical") return Mode::kClassical;
  if (m == "ice-exact") return Mode::kIceExact;
  if (m == "ice-approx") return Mode::kIceApprox;
  throw ConfigError("unknown mode '" + m + "'");
}

OracleSpec spec_for(const Problem& p, Mode mode, const setcover::ExactOptions& exact) {
  if (p.path) {
    // The interval DP is already exact.
    if (mode == Mode::kIceApprox) throw ConfigError("ice-approx needs a set cover instance");
    return wpap::dp_oracle_spec(*p.path);
  }
  return mode == Mode::kIceApprox ? setcover::bmc_oracle_spec(*p.sets)
                                  : setcover::exact_oracle_spec(*p.sets, exact);
}

std::unique_ptr<OnlineAdapter> adapter_for(const Problem& p) {
  if (p.path) return std::make_unique<wpap::WpapAdapter>(*p.path, wpap::OnlineRule::kRandomized);
  return std::make_unique<setcover::FractionalCoverAdapter>(*p.sets);
}

Rational offline_opt(const Problem& p, const RequestSet& requests) {
  if (p.path) return wpap::exact_cover_subset(*p.path, requests).cost;
  return setcover::exact_partial_cover(*p.sets, requests, static_cast<int>(requests.size())).cost;
}

struct Common {
  uint64_t seed = 0;
  std::string format = "pace";
  std::string out;
  int cap_elements = 12;
  int cap_items = 10;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--format", c.format, "Instance format")->check(CLI::IsMember({"pace", "json"}));
  cmd->add_option("--out", c.out, "Output path (default stdout)");
  cmd->add_option("--cap-elements", c.cap_elements, "Size cap on requests for exact methods");
  cmd->add_option("--cap-items", c.cap_items, "Size cap on items for exact methods");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online covering with predicted requests"};
  app.require_subcommand(1);

  // gen -------------------------------------------------------------------
  Common gen_c;
  std::string kind = "setcover";
  int n = 200, m = 40, s = 20, k = 16;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  add_common(gen, gen_c);
  gen->add_option("--kind", kind)->check(CLI::IsMember({"setcover", "wpap", "parking", "adversarial"}));
  gen->add_option("--n", n, "Elements");
  gen->add_option("--m", m, "Sets or links");
  gen->add_option("--s", s, "Set size");
  gen->add_option("--k", k, "Adversarial length");

  // decompose -------------------------------------------------------------
  Common dec_c;
  std::string dec_instance, dec_prediction, dec_mode = "ice-exact";
  std::string fraction_text = "1/2";
  auto* dec = app.add_subcommand("decompose", "Write the layer decomposition of a prediction");
  add_common(dec, dec_c);
  dec->add_option("--instance", dec_instance)->required();
  dec->add_option("--prediction", dec_prediction, "Predicted ids (default: random half)");
  dec->add_option("--fraction", fraction_text, "Predicted fraction when sampling");
  dec->add_option("--mode", dec_mode)->check(CLI::IsMember({"ice-exact", "ice-approx"}));

  // run -------------------------------------------------------------------
  Common run_c;
  std::string run_instance, run_mode = "ice-exact", alpha_text = "0", run_fraction = "1/2";
  bool full_trace = false;
  auto* run = app.add_subcommand("run", "One online run on an instance");
  add_common(run, run_c);
  run->add_option("--instance", run_instance)->required();
  run->add_option("--mode", run_mode)->check(CLI::IsMember({"classical", "ice-exact", "ice-approx"}));
  run->add_option("--alpha", alpha_text, "Fraction of predictions swapped out");
  run->add_option("--fraction", run_fraction, "Predicted fraction");
  run->add_flag("--trace", full_trace, "Print every event");

  // bench -----------------------------------------------------------------
  Common bench_c;
  bench_c.cap_elements = 0;
  bench_c.cap_items = 0;
  bench::ExperimentConfig cfg = bench::desk_config();
  std::vector<std::string> alphas, algorithms;
  std::string summary_path;
  int64_t node_limit = cfg.exact.node_limit;
  bool literal = false;
  auto* bch = app.add_subcommand("bench", "Prediction-error sweep to CSV");
  add_common(bch, bench_c);
  bch->add_option("--instances", cfg.random.instances);
  bch->add_option("--n", cfg.random.n_elements);
  bch->add_option("--m", cfg.random.n_sets);
  bch->add_option("--s", cfg.random.set_size);
  bch->add_option("--pace-dir", cfg.pace_dir, "Directory of PACE files instead of random");
  bch->add_option("--dataset", cfg.dataset);
  bch->add_option("--alpha", alphas, "Alpha grid (default 0..0.35 step 0.05)");
  bch->add_option("--algorithms", algorithms);
  bch->add_option("--seeds", cfg.seeds);
  bch->add_option("--threads", cfg.threads);
  bch->add_option("--node-limit", node_limit);
  bch->add_option("--summary", summary_path, "Also write the summary table here");
  bch->add_flag("--literal", literal, "Forward already covered requests too");
  bch->add_flag("--classical-per-alpha", cfg.classical_per_alpha);
  std::string bmc_variant = "auto";
  bch->add_option("--bmc-variant", bmc_variant, "Greedy used by ice_approx")
      ->check(CLI::IsMember({"auto", "plain", "seeded3"}));

  // verify ----------------------------------------------------------------
  Common ver_c;
  std::string ver_instance, ver_decomposition, ver_mode = "ice-exact";
  auto* ver = app.add_subcommand("verify", "Check decomposition properties by enumeration");
  add_common(ver, ver_c);
  ver->add_option("--instance", ver_instance)->required();
  ver->add_option("--decomposition", ver_decomposition, "Layer file (default: build one)");
  ver->add_option("--mode", ver_mode)->check(CLI::IsMember({"ice-exact", "ice-approx"}));
  ver->add_option("--fraction", fraction_text);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Output out(gen_c.out);
      if (kind == "setcover") {
        setcover::dump_instance(out.stream(), setcover::gen_random(gen_c.seed, n, m, s),
                                setcover::parse_format(gen_c.format));
      } else if (kind == "wpap") {
        wpap::dump_json(out.stream(), wpap::gen_random_links(gen_c.seed, n, m));
      } else if (kind == "parking") {
        wpap::dump_json(out.stream(),
                        wpap::gen_parking_permit(2, {1, 4}, {Rational(1), Rational(5, 2)}, n));
      } else {
        wpap::dump_json(out.stream(), wpap::gen_adversarial(k).instance);
      }
      return 0;
    }

    setcover::ExactOptions exact;
    if (*dec) {
      const Problem problem = load_problem(dec_instance, dec_c.format);
      const CoveringInstance& instance = problem.instance();
      const RequestSet prediction =
          dec_prediction.empty()
              ? bench::make_prediction(instance, dec_c.seed, Rational::parse(fraction_text)).predicted
              : make_request_set(parse_ids(dec_prediction));
      const Decomposition d =
          build_decomposition(instance, prediction, spec_for(problem, parse_mode(dec_mode), exact));
      Output out(dec_c.out);
      write_decomposition(out.stream(), instance, d);
      return 0;
    }

    if (*run) {
      const Problem problem = load_problem(run_instance, run_c.format);
      const CoveringInstance& instance = problem.instance();
      const Mode mode = parse_mode(run_mode);
      const auto split = bench::make_prediction(instance, derive_seed(run_c.seed, 1),
                                                Rational::parse(run_fraction));
      const auto arrivals = bench::perturb(split.predicted, split.pool,
                                           Rational::parse(alpha_text), derive_seed(run_c.seed, 2));
      const auto adapter_ptr = adapter_for(problem);
      const OnlineAdapter& adapter = *adapter_ptr;
      IceOptions options;
      options.seed = derive_seed(run_c.seed, 3);
      options.skip_covered = true;
      IceTrace trace;
      if (mode == Mode::kClassical) {
        options.decomposition_tie_break = false;
        trace = run_plain(instance, adapter, arrivals.order, options);
      } else {
        const Decomposition d =
            build_decomposition(instance, split.predicted, spec_for(problem, mode, exact));
        trace = ice_run(instance, split.predicted, d, adapter, arrivals.order, options);
      }
      const Rational opt = offline_opt(problem, arrivals.actual);
      Output out(run_c.out);
      auto& os = out.stream();
      if (full_trace) os << trace.to_text(instance);
      os << "mode " << run_mode << "\narrivals " << trace.k << " (predicted " << trace.k_minus
         << ", unpredicted " << trace.k_plus << ")\neta "
         << prediction_error(arrivals.actual, split.predicted) << "\nlayers bought "
         << trace.layers_bought.size() << "\ncharged cost " << trace.total_cost.to_short_string()
         << "\nsolution cost " << trace.solution_cost.to_short_string() << "\nopt "
         << opt.to_short_string() << "\nratio "
         << (opt.is_zero() ? 1.0 : (trace.solution_cost / opt).to_double()) << '\n';
      return 0;
    }

    if (*bch) {
      if (!alphas.empty()) {
        cfg.alpha_grid.clear();
        for (const auto& a : alphas) cfg.alpha_grid.push_back(Rational::parse(a));
      }
      if (!algorithms.empty()) {
        cfg.algorithms.clear();
        for (const auto& a : algorithms) cfg.algorithms.push_back(bench::parse_algorithm(a));
      }
      if (bench_c.seed != 0) cfg.seeds = {bench_c.seed};
      cfg.exact.node_limit = node_limit;
      cfg.skip_covered = !literal;
      cfg.bmc_variant = bmc_variant == "plain"     ? setcover::BmcVariant::kPlain
                        : bmc_variant == "seeded3" ? setcover::BmcVariant::kSeeded3
                                                   : setcover::BmcVariant::kAuto;
      cfg.cap_elements = bench_c.cap_elements;
      cfg.cap_items = bench_c.cap_items;
      Output out(bench_c.out);
      bench::write_csv_header(out.stream());
      const auto rows = bench::run_experiment(cfg, [&](const bench::ExperimentRow& r) {
        bench::write_csv_row(out.stream(), r);
        out.stream().flush();
      });
      if (!summary_path.empty()) {
        std::ofstream sum(summary_path);
        bench::write_summary(sum, bench::summarize(rows));
      }
      return 0;
    }

    if (*ver) {
      const Problem problem = load_problem(ver_instance, ver_c.format);
      const CoveringInstance& instance = problem.instance();
      Decomposition d;
      if (!ver_decomposition.empty()) {
        std::ifstream in(ver_decomposition);
        if (!in) throw ConfigError("cannot open " + ver_decomposition);
        d = read_decomposition(in, instance);
      } else {
        const auto prediction =
            bench::make_prediction(instance, ver_c.seed, Rational::parse(fraction_text)).predicted;
        d = build_decomposition(instance, prediction,
                                spec_for(problem, parse_mode(ver_mode), exact));
      }
      const EnumerationCaps caps{ver_c.cap_elements, ver_c.cap_items};
      const bool approx = parse_mode(ver_mode) == Mode::kIceApprox;
      const auto report = verify_properties(
          instance, d, Rational(1), approx ? kBmcGamma : 1.0,
          [&](const RequestSet& residual, int i) {
            return enumerate_min_cover(instance, residual, i, caps).cost;
          });
      Output out(ver_c.out);
      auto& os = out.stream();
      os << "g " << report.g << '\n';
      for (const auto& l : report.layers) {
        os << "layer " << l.layer << " A " << (l.a ? "ok" : "FAIL") << " B "
           << (l.b_vacuous ? "vacuous" : l.b ? "ok" : "FAIL") << " C "
           << (l.c_vacuous ? "vacuous" : l.c ? "ok" : "FAIL") << " D " << (l.d ? "ok" : "FAIL")
           << '\n';
      }
      os << (report.ok() ? "all properties hold" : report.first_violation()) << '\n';
      return report.ok() ? 0 : 1;
    }
  } catch (const ice::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
