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

#include "normlab/rng.hpp"
#include "normlab/roles.hpp"

namespace normlab {

struct LearnerConfig {
  double alpha = 0.1;    // learning rate, (0, 1]
  double epsilon = 0.1;  // exploration probability
  double omega = 0.0;    // weight on the neighbourhood mean reward

  void validate() const;
};

/// Epsilon-greedy choice: one uniform draw decides exploration, then either a
/// uniform role or the argmax with ties broken uniformly at random.
inline RoleId select_role(std::span<const double> q, double epsilon, Rng& rng) {
  const std::size_t k = q.size();
  if (uniform01(rng) < epsilon) return static_cast<RoleId>(uniform_index(rng, k));

  double best = q[0];
  for (std::size_t i = 1; i < k; ++i) best = q[i] > best ? q[i] : best;
  std::size_t ties = 0;
  for (std::size_t i = 0; i < k; ++i) ties += q[i] == best;
  std::size_t pick = ties == 1 ? 0 : uniform_index(rng, ties);
  for (std::size_t i = 0; i < k; ++i) {
    if (q[i] == best && pick-- == 0) return static_cast<RoleId>(i);
  }
  return 0;  // unreachable for finite q
}

inline double update_value(double q, double reward, double alpha) {
  return q + alpha * (reward - q);
}

/// omega * mean(neighbours) + (1 - omega) * own. Empty neighbour list is a
/// contract violation.
double blended_reward(double own, std::span<const double> neighbor_rewards, double omega);

}  // namespace normlab
