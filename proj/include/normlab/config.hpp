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
#include "normlab/evolution.hpp"
#include "normlab/ga.hpp"
#include "normlab/games.hpp"

namespace normlab {

enum class SweepAxis { kLambda, kOperators, kAlpha };

std::string to_string(SweepAxis axis);
/// Throws ConfigError for anything but lambda|operators|alpha.
SweepAxis parse_sweep_axis(const std::string& s);

/// One point on a sweep axis. `label` is filesystem-safe and feeds the seed.
struct SweepValue {
  std::string label;
  double number = 0.0;  // lambda or alpha
  EvoConfig operators;  // mp/mr/rap/rdp for the operators axis
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::kLambda;
  std::vector<SweepValue> values;
};

/// The full 3^4 grid over mp {0.1,0.5,0.9}, mr {0.1,0.5,1}, rap {0.1,0.5,0.9},
/// rdp {0.1,0.5,0.9}, layered over `base`.
std::vector<SweepValue> operator_grid(const EvoConfig& base);

/// Parses sweep values: numbers for lambda/alpha; for operators either the
/// string "grid" or a list of {mp, mr, rap, rdp} objects. Empty is an error.
std::vector<SweepValue> parse_sweep_values(SweepAxis axis, const nlohmann::json& values,
                                           const EvoConfig& base);

/// Everything one CLI invocation needs.
struct RunConfig {
  std::vector<Preset> envs;
  LearnerConfig learner;
  EpisodeConfig episode;
  EvoConfig evo;
  GaConfig ga;
  std::uint64_t base_seed = 1;
  int seed_count = 30;
  std::string output_dir = "out";
  int workers = 1;
  std::optional<SweepSpec> sweep;

  /// Checks every module invariant; throws ConfigError naming the first
  /// violation.
  void validate() const;
  nlohmann::json to_json() const;
  /// config_hash() of to_json().
  std::string hash() const;
};

/// Accepts "env": "<preset>" or "envs": [...], where each entry is a preset
/// id or {"id": ..., "preset": ..., overrides} / {"id": ..., "type": ...}.
RunConfig config_from_json(const nlohmann::json& j);
/// Reads and validates a JSON config file. IoError if unreadable.
RunConfig load_config(const std::string& path);

RunSetup setup_for(const RunConfig& cfg, const Preset& env);

/// Per-run seed: stable hash of (base seed, env id, axis label, run index).
std::uint64_t run_seed(std::uint64_t base_seed, const std::string& env_id,
                       const std::string& axis_label, int run_index);

}  // namespace normlab
