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
#include <string>
#include <vector>

#include "normlab/games.hpp"
#include "normlab/learner.hpp"
#include "normlab/norm.hpp"
#include "normlab/sanctions.hpp"
#include "normlab/world.hpp"

namespace normlab {

struct EpisodeConfig {
  int steps = 1000;       // T
  int score_from = 801;   // zeta; steps zeta..T (1-based) are scored
  int eval_repeats = 5;
  Dims dims{};
  SanctionMode sanction_mode = SanctionMode::kClamped;

  void validate() const;
};

/// One row of the per-step trace.
struct StepStats {
  int t = 0;
  double mean_reward = 0.0;
  std::vector<int> role_counts;
  double env_total = 0.0;
};

struct EpisodeResult {
  double score = 0.0;            // time-averaged group payoff over [zeta, T]
  std::vector<RoleId> final_roles;
  std::vector<StepStats> trace;  // empty unless requested
};

/// Lifetime learning: for t = 1..T every agent picks a role, the game pays
/// out, sanctions redistribute (norm may be null), and every agent updates
/// its value for the chosen role from its post-sanction reward (blended with
/// the neighbourhood mean when omega > 0).
///
/// RNG order per step: role draws in row-major order, game draws, sanction
/// shuffles.
EpisodeResult run_episode(GridWorld& world, const GameConfig& game, Norm* norm,
                          const LearnerConfig& learner, const EpisodeConfig& episode,
                          Rng& rng, bool record_trace = false);

struct EvalResult {
  double score = 0.0;               // mean over repeats
  std::vector<double> repeat_scores;
  std::vector<RoleId> final_roles;  // from repeat 0
};

/// Mean run_episode score over eval_repeats fresh episodes seeded by
/// derive_seed(seed, repeat). Usage counters on `norm` accumulate.
EvalResult eval_norm(Norm* norm, const GameConfig& game, const LearnerConfig& learner,
                     const EpisodeConfig& episode, std::uint64_t seed);

/// "t,mean_reward,<role>..." header then one row per traced step; the role
/// columns hold how many agents chose each role. env_total closes the row.
std::string episode_trace_csv(const EpisodeResult& result, const RoleSet& roles);

/// Plays fixed roles (no learning, no sanctions) and returns the
/// time-averaged group payoff over [zeta, T].
double play_fixed_roles(const std::vector<RoleId>& roles, const GameConfig& game,
                        const EpisodeConfig& episode, Rng& rng);

}  // namespace normlab
