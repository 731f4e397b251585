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

#include "normlab/sanctions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "normlab/error.hpp"

namespace normlab {

namespace {

// All 8! orderings of the Moore neighbourhood; one uniform index picks a
// uniformly random shuffle with a single draw.
const std::vector<std::array<std::uint8_t, 8>>& neighbor_orders() {
  static const auto table = [] {
    std::vector<std::array<std::uint8_t, 8>> v;
    std::array<std::uint8_t, 8> p{0, 1, 2, 3, 4, 5, 6, 7};
    do {
      v.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return table;
}

}  // namespace

void apply_sanctions(GridWorld& world, Norm* norm, Rng& rng, SanctionMode mode) {
  const auto& topo = world.topology();
  const auto roles = world.roles();
  auto rewards = world.rewards();
  const std::size_t m = world.size();
  if (norm != nullptr) require(norm->roles() == world.role_count(), "norm size does not match roles");
  if (mode == SanctionMode::kClamped) {
    for (double r : rewards) require(r >= 0.0, "apply_sanctions: negative reward on input");
  }

  thread_local std::vector<std::uint32_t> order;
  order.resize(m);
  std::iota(order.begin(), order.end(), 0u);
  shuffle(order.begin(), order.end(), rng);

  // Rows without any rule cannot act; their draws are still consumed.
  const std::size_t k = world.role_count();
  std::array<unsigned, 16> active_cols{};
  if (norm != nullptr) {
    require(k <= active_cols.size(), "too many roles");
    for (RoleId r = 0; r < k; ++r) {
      for (RoleId c = 0; c < k; ++c) active_cols[r] |= static_cast<unsigned>(norm->at(r, c) != 0.0) << c;
    }
  }

  const double* values = norm != nullptr ? norm->values().data() : nullptr;
  std::uint64_t* usage = norm != nullptr ? norm->usage_data() : nullptr;
  const auto& orders = neighbor_orders();
  for (const auto focal : order) {
    const auto& perm = orders[uniform_index(rng, orders.size())];
    if (norm == nullptr) continue;
    const RoleId row = roles[focal];
    if (active_cols[row] == 0) continue;
    const auto& around = topo.neighbors(focal);
    const double* rule_row = values + row * k;
    std::uint64_t* use_row = usage + row * k;
    if (mode == SanctionMode::kClamped) {
      // Most neighbours fall in columns without a rule. Find the slots that
      // do, then settle them in permutation order.
      const unsigned col_mask = active_cols[row];
      std::array<std::uint32_t, 8> others{};
      unsigned hits = 0;
      for (std::size_t j = 0; j < perm.size(); ++j) {
        others[j] = around[perm[j]];
        hits |= ((col_mask >> roles[others[j]]) & 1u) << j;
      }
      for (; hits != 0; hits &= hits - 1) {
        const auto other = others[std::countr_zero(hits)];
        const RoleId col = roles[other];
        const double s = rule_row[col];
        ++use_row[col];
        const double t = s > 0.0 ? std::min(s, rewards[focal]) : -std::min(-s, rewards[other]);
        rewards[focal] -= t;
        rewards[other] += t;
      }
    } else {
      for (const auto slot : perm) {
        const auto other = around[slot];
        const RoleId col = roles[other];
        const double s = rule_row[col];
        if (s == 0.0) continue;
        ++use_row[col];
        if ((s > 0.0 && s >= rewards[focal]) || (s < 0.0 && -s >= rewards[other])) {
          rewards[focal] -= s;
          rewards[other] += s;
        }
      }
    }
  }
}

}  // namespace normlab
