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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "normlab/norm.hpp"
#include "normlab/roles.hpp"

namespace normlab {

/// Incumbent (or best-so-far) state after one iteration/generation.
struct TracePoint {
  int iteration = 0;
  double fitness = 0.0;  // Ft
  double payoff = 0.0;   // R
  std::size_t l0 = 0;
};

/// Outcome of one evolve / baseline / global run.
struct RunRecord {
  std::string mode;  // "evolve", "global", "selfish", "altruist", "selfish_altruist"
  std::string env_id;
  std::uint64_t seed = 0;       // the run's own seed
  std::uint64_t base_seed = 0;  // seed of the invocation it came from
  int run_index = 0;
  std::string config_hash;
  nlohmann::json config;  // snapshot of the effective configuration
  RoleSet roles;
  std::vector<TracePoint> trace;
  std::optional<Norm> final_norm;
  std::vector<RoleId> final_roles;
  int grid_rows = 10;
  int grid_cols = 10;
  double payoff = 0.0;   // R of the returned solution
  double fitness = 0.0;  // Ft of the returned solution
  double validation_payoff = 0.0;  // fresh re-evaluation on independent seeds

  std::size_t final_l0() const;
  /// True when trace fitness never decreases.
  bool trace_monotone() const;
};

/// 16-hex-digit FNV-1a of the canonical JSON dump.
std::string config_hash(const nlohmann::json& config);

nlohmann::json record_to_json(const RunRecord& r);
RunRecord record_from_json(const nlohmann::json& j);

/// "iteration,Ft,R,L0" rows preceded by a provenance comment line.
std::string trace_csv(const RunRecord& r);

}  // namespace normlab
