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

#pragma once

#include <string>
#include <vector>

#include "normlab/record.hpp"

namespace normlab {

struct SeedSummary {
  std::string env_id;
  std::string mode;
  double lambda = 0.0;
  std::size_t n = 0;
  double mean_payoff = 0.0;
  double se_payoff = 0.0;
  double mean_l0 = 0.0;
  double se_l0 = 0.0;
  std::string modal_type;  // describe_sign_pattern of the most common pattern
  std::size_t modal_count = 0;
  std::vector<Norm> final_norms;
};

/// Sample standard deviation / sqrt(n); 0 when n == 1.
double standard_error(const std::vector<double>& xs);

/// Records must share env, mode and config hash, else ContractViolation.
SeedSummary summarize(const std::vector<RunRecord>& records);

std::string summary_csv_header();
std::string summary_csv_row(const SeedSummary& s);

}  // namespace normlab
