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
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

#include "ice/bench/bench.h"
#include "ice/core/errors.h"

namespace ice::bench {
namespace {

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const std::string& checked_field(const std::string& s) {
  if (s.find_first_of(",\n\r\"") != std::string::npos) {
    throw DomainError("CSV field '" + s + "' contains a separator");
  }
  return s;
}

template <typename T>
T parse_number(const std::string& text, int line, const char* column) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ParseError(line, std::string("bad ") + column + " '" + text + "'");
  }
  return value;
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

bool opt_is_bound(const ExperimentRow& row) {
  return row.oracle_kind.find(kBoundSuffix) != std::string::npos;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const ExperimentRow& row) {
  out << checked_field(row.dataset) << ',' << checked_field(row.instance_id) << ',' << row.seed
      << ',' << shortest(row.alpha) << ',' << row.eta << ',' << shortest(row.eta_norm) << ','
      << checked_field(row.algorithm) << ',' << shortest(row.cost) << ',' << shortest(row.opt)
      << ',' << shortest(row.ratio) << ',' << shortest(row.runtime_ms) << ','
      << checked_field(row.oracle_kind) << '\n';
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  write_csv_header(out);
  for (const ExperimentRow& r : rows) write_csv_row(out, r);
}

std::vector<ExperimentRow> read_csv(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ParseError(1, "unexpected header");
  std::vector<ExperimentRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 12) {
      throw ParseError(line_no, "expected 12 columns, found " + std::to_string(f.size()));
    }
    ExperimentRow r;
    r.dataset = f[0];
    r.instance_id = f[1];
    r.seed = parse_number<uint64_t>(f[2], line_no, "seed");
    r.alpha = parse_number<double>(f[3], line_no, "alpha");
    r.eta = parse_number<int64_t>(f[4], line_no, "eta");
    r.eta_norm = parse_number<double>(f[5], line_no, "eta_norm");
    r.algorithm = f[6];
    r.cost = parse_number<double>(f[7], line_no, "cost");
    r.opt = parse_number<double>(f[8], line_no, "opt");
    r.ratio = parse_number<double>(f[9], line_no, "ratio");
    r.runtime_ms = parse_number<double>(f[10], line_no, "runtime_ms");
    r.oracle_kind = f[11];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows) {
  std::map<std::tuple<std::string, std::string, int>, std::vector<double>> groups;
  for (const ExperimentRow& r : rows) {
    if (opt_is_bound(r)) continue;
    const int bucket = static_cast<int>(std::lround(100.0 * r.eta_norm));
    groups[{r.dataset, r.algorithm, bucket}].push_back(r.ratio);
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, values] : groups) {
    SummaryRow s;
    std::tie(s.dataset, s.algorithm, s.eta_percent) = key;
    s.count = static_cast<int>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.count);
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(s.count));
    out.push_back(std::move(s));
  }
  return out;
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& summary) {
  out << "dataset,algorithm,eta_percent,count,mean,std\n";
  for (const SummaryRow& s : summary) {
    out << s.dataset << ',' << s.algorithm << ',' << s.eta_percent << ',' << s.count << ','
        << shortest(s.mean) << ',' << shortest(s.stddev) << '\n';
  }
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("spearman needs equal-length samples");
  if (x.size() < 2) return 0.0;
  const std::vector<double> rx = ranks(x);
  const std::vector<double> ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace ice::bench
