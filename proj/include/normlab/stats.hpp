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

#include <span>

namespace normlab {

struct RankSumResult {
  double u = 0.0;        // Mann-Whitney U of the first sample (midranks)
  double p_value = 1.0;  // two-sided
  bool exact = false;
};

/// Wilcoxon rank-sum test. Exact enumeration when n + m <= 12, otherwise
/// the normal approximation with tie and continuity correction.
/// Empty samples are a contract violation.
RankSumResult wilcoxon_rank_sum(std::span<const double> x, std::span<const double> y);

}  // namespace normlab
