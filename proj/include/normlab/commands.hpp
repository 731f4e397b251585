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

#include <filesystem>
#include <string>
#include <vector>

#include "normlab/config.hpp"
#include "normlab/record.hpp"
#include "normlab/summary.hpp"

namespace normlab {

struct CommandResult {
  std::vector<RunRecord> records;  // env-major, then run index
  std::vector<SeedSummary> summaries;  // one per env (and sweep cell)
  std::filesystem::path out_dir;
};

/// evolve_norm for every env x seed; writes per-run files and summary.csv
/// under <output>/evolve/.
CommandResult cmd_evolve(const RunConfig& cfg);

/// mode: global | selfish | altruist | selfish_altruist. Same layout as
/// cmd_evolve under <output>/<mode>/. ConfigError on unknown modes.
CommandResult cmd_baseline(const RunConfig& cfg, const std::string& mode);

/// Values x envs x seeds of evolve_norm along cfg.sweep; writes sweep.csv
/// (axis_value, env_id, seed, R, L0, Ft) and summary.csv under
/// <output>/sweep-<axis>/.
CommandResult cmd_sweep(const RunConfig& cfg);

/// Re-emits the SVG grid and rule statements for stored records as
/// <out_dir>/<mode>_<env>_<stem>_{roles.svg,rules.txt}. Returns the written paths.
std::vector<std::filesystem::path> cmd_render(const std::vector<std::filesystem::path>& records,
                                              const std::filesystem::path& out_dir);

/// Writes <stem>.json, <stem>_trace.csv, <stem>_roles.svg, <stem>_rules.txt.
void write_run_files(const RunRecord& record, const std::filesystem::path& dir,
                     const std::string& stem);

}  // namespace normlab
