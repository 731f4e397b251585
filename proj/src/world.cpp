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

#include "normlab/world.hpp"

#include <algorithm>

namespace normlab {

GridWorld::GridWorld(Dims dims, std::size_t role_count)
    : topology_(dims),
      k_(role_count),
      roles_(dims.cells(), 0),
      rewards_(dims.cells(), 0.0),
      q_(dims.cells() * role_count, 0.0),
      env_(dims.cells(), 0.0) {}

AgentState GridWorld::agent(std::size_t i) const {
  auto qs = q(i);
  return {std::vector<double>(qs.begin(), qs.end()), roles_[i], rewards_[i]};
}

void GridWorld::reset(double env_value) {
  std::fill(roles_.begin(), roles_.end(), 0);
  std::fill(rewards_.begin(), rewards_.end(), 0.0);
  std::fill(q_.begin(), q_.end(), 0.0);
  std::fill(env_.begin(), env_.end(), env_value);
}

}  // namespace normlab
