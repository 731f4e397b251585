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

#include "normlab/learner.hpp"

#include <numeric>

#include "normlab/error.hpp"

namespace normlab {

void LearnerConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("learner.alpha must be in (0, 1]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ConfigError("learner.epsilon must be in [0, 1]");
  if (!(omega >= 0.0 && omega <= 1.0)) throw ConfigError("learner.omega must be in [0, 1]");
}

double blended_reward(double own, std::span<const double> neighbor_rewards, double omega) {
  require(!neighbor_rewards.empty(), "blended_reward needs at least one neighbour");
  const double mean = std::accumulate(neighbor_rewards.begin(), neighbor_rewards.end(), 0.0) /
                      static_cast<double>(neighbor_rewards.size());
  return omega * mean + (1.0 - omega) * own;
}

}  // namespace normlab
