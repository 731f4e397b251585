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

#include "normlab/stats.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "normlab/error.hpp"

namespace normlab {

namespace {

// Midranks (1-based) of the pooled sample, in input order.
std::vector<double> midranks(const std::vector<double>& pooled) {
  std::vector<std::size_t> idx(pooled.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return pooled[a] < pooled[b]; });
  std::vector<double> ranks(pooled.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && pooled[idx[j + 1]] == pooled[idx[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = r;
    i = j + 1;
  }
  return ranks;
}

constexpr std::size_t kExactLimit = 12;

}  // namespace

RankSumResult wilcoxon_rank_sum(std::span<const double> x, std::span<const double> y) {
  require(!x.empty() && !y.empty(), "wilcoxon_rank_sum needs two non-empty samples");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  const std::size_t total = n + m;

  std::vector<double> pooled(x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  const auto ranks = midranks(pooled);

  const double rank_sum_x = std::accumulate(ranks.begin(), ranks.begin() + static_cast<long>(n), 0.0);
  const double offset = static_cast<double>(n) * (static_cast<double>(n) + 1.0) / 2.0;
  const double mean_u = static_cast<double>(n) * static_cast<double>(m) / 2.0;

  RankSumResult out;
  out.u = rank_sum_x - offset;
  const double observed = std::abs(out.u - mean_u);

  if (total <= kExactLimit) {
    out.exact = true;
    std::uint64_t hits = 0;
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != n) continue;
      double s = 0.0;
      for (std::size_t i = 0; i < total; ++i) {
        if (mask & (1u << i)) s += ranks[i];
      }
      ++count;
      if (std::abs(s - offset - mean_u) >= observed - 1e-9) ++hits;
    }
    out.p_value = static_cast<double>(hits) / static_cast<double>(count);
    return out;
  }

  std::map<double, std::size_t> ties;
  for (double v : pooled) ++ties[v];
  double tie_term = 0.0;
  for (const auto& [v, t] : ties) {
    const double td = static_cast<double>(t);
    tie_term += td * td * td - td;
  }
  const double nd = static_cast<double>(total);
  const double var = static_cast<double>(n) * static_cast<double>(m) / 12.0 *
                     ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));
  if (var <= 0.0) {
    out.p_value = 1.0;
    return out;
  }
  const double z = std::max(0.0, observed - 0.5) / std::sqrt(var);
  out.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return out;
}

}  // namespace normlab
