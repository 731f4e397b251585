// Copyright 2026 The normlab Authors.
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

#include "normlab/summary.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "normlab/error.hpp"

namespace normlab {

double standard_error(const std::vector<double>& xs) {
  require(!xs.empty(), "standard_error of an empty sample");
  if (xs.size() == 1) return 0.0;
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
}

SeedSummary summarize(const std::vector<RunRecord>& records) {
  require(!records.empty(), "summarize needs at least one record");
  const auto& head = records.front();
  for (const auto& r : records) {
    require(r.env_id == head.env_id && r.mode == head.mode && r.config_hash == head.config_hash,
            "summarize: records come from different configurations");
  }

  SeedSummary s;
  s.env_id = head.env_id;
  s.mode = head.mode;
  if (head.config.contains("evo")) s.lambda = head.config["evo"].value("lambda", 0.0);
  s.n = records.size();

  std::vector<double> payoffs;
  std::vector<double> sizes;
  std::map<std::string, std::size_t> patterns;
  for (const auto& r : records) {
    payoffs.push_back(r.payoff);
    sizes.push_back(static_cast<double>(r.final_l0()));
    if (r.final_norm) {
      s.final_norms.push_back(*r.final_norm);
      ++patterns[describe_sign_pattern(*r.final_norm, r.roles)];
    } else {
      ++patterns["none"];
    }
  }
  const double n = static_cast<double>(s.n);
  s.mean_payoff = std::accumulate(payoffs.begin(), payoffs.end(), 0.0) / n;
  s.se_payoff = standard_error(payoffs);
  s.mean_l0 = std::accumulate(sizes.begin(), sizes.end(), 0.0) / n;
  s.se_l0 = standard_error(sizes);
  // std::map iterates in key order, so ties resolve to the smallest pattern.
  for (const auto& [pattern, count] : patterns) {
    if (count > s.modal_count) {
      s.modal_type = pattern;
      s.modal_count = count;
    }
  }
  return s;
}

std::string summary_csv_header() {
  return "env_id,lambda,n_seeds,mean_R,se_R,mean_L0,se_L0,modal_type,modal_count";
}

std::string summary_csv_row(const SeedSummary& s) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g,%zu,%.17g,%.17g,%.17g,%.17g,", s.lambda, s.n,
                s.mean_payoff, s.se_payoff, s.mean_l0, s.se_l0);
  return s.env_id + "," + buf + s.modal_type + "," + std::to_string(s.modal_count);
}

}  // namespace normlab
