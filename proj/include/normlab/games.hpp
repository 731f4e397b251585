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

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "normlab/rng.hpp"
#include "normlab/roles.hpp"
#include "normlab/world.hpp"

namespace normlab {

/// Settlement maintenance. Cleaners and soldiers never earn a base payoff.
struct SettlementConfig {
  double waste_max = 0.0;    // wa
  double waste_rate = 1.0;   // tau, waste added per step
  double attack_p = 0.0;     // per-cell attack probability
  double forager_pay = 3.0;
  double hunter_pay = 6.0;
  int hunter_quorum = 5;     // hunters needed in the closed neighbourhood

  void validate() const;
};

/// Common pasture with logistic regrowth.
struct PastureConfig {
  double growth_rate = 0.0;    // c
  double worker_bonus = 0.0;   // w
  double carrying_cap = 10.0;  // K
  double initial_stock = 5.0;
  double greedy_take = 3.0;
  double considerate_take = 1.0;
  bool harvest_own_cell = true;  // false: herders only reach the 8 neighbours

  void validate() const;
};

using GameConfig = std::variant<SettlementConfig, PastureConfig>;

const RoleSet& roles_for(const GameConfig& game);
void validate(const GameConfig& game);

/// Stage I for the settlement: payoff from roles, attacks, waste penalty,
/// then the waste update. Writes world.rewards() and world.env().
void settlement_step(GridWorld& world, const SettlementConfig& cfg, Rng& rng);

/// Stage I for the pasture: shuffled consumption, then one Euler step of
/// logistic growth. Writes world.rewards() and world.env().
void pasture_step(GridWorld& world, const PastureConfig& cfg, Rng& rng);

void game_step(GridWorld& world, const GameConfig& game, Rng& rng);

/// Logistic growth for one cell over one unit step, clamped to [0, K].
/// Depleted cells stay depleted.
double logistic_step(double stock, double rate, double cap);

/// Fresh environment, zeroed Q-tables and rewards.
void reset(GridWorld& world, const GameConfig& game);

/// A named environment instance such as "settlement-env1".
struct Preset {
  std::string id;
  GameConfig game;
};

/// The ten built-in environments: settlement (wa, P) and pasture (w, c).
const std::vector<Preset>& presets();
/// Throws ConfigError for unknown ids.
const Preset& find_preset(const std::string& id);

nlohmann::json game_to_json(const GameConfig& game);
/// {"type": "settlement"|"pasture", ...fields}; missing fields keep defaults.
GameConfig game_from_json(const nlohmann::json& j);

}  // namespace normlab
