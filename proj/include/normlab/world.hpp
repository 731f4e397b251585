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

#include <cstddef>
#include <span>
#include <vector>

#include "normlab/grid.hpp"
#include "normlab/roles.hpp"

namespace normlab {

/// Snapshot of one agent.
struct AgentState {
  std::vector<double> q;
  RoleId role = 0;
  double reward = 0.0;
};

/// One agent per cell of a torus plus a per-cell environment scalar
/// (waste level or resource stock). Storage is column-wise per field.
class GridWorld {
 public:
  GridWorld(Dims dims, std::size_t role_count);

  const Topology& topology() const { return topology_; }
  Dims dims() const { return topology_.dims(); }
  std::size_t size() const { return roles_.size(); }
  std::size_t role_count() const { return k_; }

  std::span<RoleId> roles() { return roles_; }
  std::span<const RoleId> roles() const { return roles_; }
  std::span<double> rewards() { return rewards_; }
  std::span<const double> rewards() const { return rewards_; }
  std::span<double> env() { return env_; }
  std::span<const double> env() const { return env_; }

  std::span<double> q(std::size_t agent) { return {q_.data() + agent * k_, k_}; }
  std::span<const double> q(std::size_t agent) const { return {q_.data() + agent * k_, k_}; }

  AgentState agent(std::size_t i) const;

  /// Q-tables and rewards to zero, roles to 0, env filled with `env_value`.
  void reset(double env_value);

 private:
  Topology topology_;
  std::size_t k_;
  std::vector<RoleId> roles_;
  std::vector<double> rewards_;
  std::vector<double> q_;
  std::vector<double> env_;
};

}  // namespace normlab
