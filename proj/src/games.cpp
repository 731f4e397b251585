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

#include "normlab/games.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "normlab/error.hpp"

namespace normlab {

void SettlementConfig::validate() const {
  if (!(waste_max >= 0.0)) throw ConfigError("settlement.waste_max must be >= 0");
  if (!(waste_rate > 0.0)) throw ConfigError("settlement.waste_rate must be > 0");
  if (!(attack_p >= 0.0 && attack_p <= 1.0)) throw ConfigError("settlement.attack_p must be in [0, 1]");
  if (!(forager_pay > 0.0)) throw ConfigError("settlement.forager_pay must be > 0");
  if (!(hunter_pay > forager_pay)) throw ConfigError("settlement.hunter_pay must exceed forager_pay");
  if (hunter_quorum < 1 || hunter_quorum > 9) throw ConfigError("settlement.hunter_quorum must be in [1, 9]");
}

void PastureConfig::validate() const {
  if (!(growth_rate >= 0.0)) throw ConfigError("pasture.growth_rate must be >= 0");
  if (!(worker_bonus >= 0.0)) throw ConfigError("pasture.worker_bonus must be >= 0");
  if (!(carrying_cap > 0.0)) throw ConfigError("pasture.carrying_cap must be > 0");
  if (!(initial_stock > 0.0 && initial_stock <= carrying_cap)) {
    throw ConfigError("pasture.initial_stock must be in (0, carrying_cap]");
  }
  if (!(considerate_take > 0.0)) throw ConfigError("pasture.considerate_take must be > 0");
  if (!(greedy_take > considerate_take)) throw ConfigError("pasture.greedy_take must exceed considerate_take");
}

const RoleSet& roles_for(const GameConfig& game) {
  return std::holds_alternative<SettlementConfig>(game) ? settlement_roles() : pasture_roles();
}

void validate(const GameConfig& game) {
  std::visit([](const auto& cfg) { cfg.validate(); }, game);
}

namespace {

// Per-cell flags over the closed neighbourhood (cell itself plus 8 neighbours).
std::vector<std::uint32_t>& scratch_order(std::size_t m) {
  thread_local std::vector<std::uint32_t> order;
  order.resize(m);
  std::iota(order.begin(), order.end(), 0u);
  return order;
}

}  // namespace

void settlement_step(GridWorld& world, const SettlementConfig& cfg, Rng& rng) {
  using namespace settlement;
  const auto& topo = world.topology();
  const auto roles = world.roles();
  auto rewards = world.rewards();
  auto waste = world.env();
  const std::size_t m = world.size();
  const bool random_attacks = cfg.attack_p > 0.0 && cfg.attack_p < 1.0;
  const bool always_attacked = cfg.attack_p >= 1.0;

  // The closed neighbourhood of each cell is gathered directly; the loop
  // body is kept free of data-dependent branches because roles are noisy.
  for (std::size_t c = 0; c < m; ++c) {
    const RoleId own = roles[c];
    int hunters = own == kHunter;
    bool guarded = own == kSoldier;
    bool cleaned = own == kCleaner;
    for (auto n : topo.neighbors(c)) {
      const RoleId r = roles[n];
      hunters += r == kHunter;
      guarded |= r == kSoldier;
      cleaned |= r == kCleaner;
    }
    double raw = own == kForager ? cfg.forager_pay : 0.0;
    raw = (own == kHunter && hunters >= cfg.hunter_quorum) ? cfg.hunter_pay : raw;
    bool attacked = always_attacked;
    if (random_attacks) attacked = uniform01(rng) < cfg.attack_p;
    raw = (attacked && !guarded) ? 0.0 : raw;
    rewards[c] = std::max(0.0, raw - waste[c]);
    // Only this cell's reward reads waste[c], so updating in place is safe.
    waste[c] = cleaned ? 0.0 : std::min(cfg.waste_max, waste[c] + cfg.waste_rate);
  }
}

double logistic_step(double stock, double rate, double cap) {
  if (stock <= 0.0) return 0.0;
  const double next = stock + rate * (1.0 - stock / cap) * stock;
  return std::clamp(next, 0.0, cap);
}

void pasture_step(GridWorld& world, const PastureConfig& cfg, Rng& rng) {
  using namespace pasture;
  const auto& topo = world.topology();
  const auto roles = world.roles();
  auto rewards = world.rewards();
  auto stock = world.env();
  const std::size_t m = world.size();

  auto& order = scratch_order(m);
  shuffle(order.begin(), order.end(), rng);

  std::array<std::uint32_t, 9> live{};
  for (auto agent : order) {
    rewards[agent] = 0.0;
    const RoleId r = roles[agent];
    if (r == kWorker) continue;
    std::size_t n_live = 0;
    if (cfg.harvest_own_cell && stock[agent] > 0.0) live[n_live++] = agent;
    for (auto n : topo.neighbors(agent)) {
      if (stock[n] > 0.0) live[n_live++] = n;
    }
    if (n_live == 0) continue;
    const auto cell = live[n_live == 1 ? 0 : uniform_index(rng, n_live)];
    const double take = r == kGreedy ? cfg.greedy_take : cfg.considerate_take;
    const double harvested = std::min(take, stock[cell]);
    stock[cell] -= harvested;
    rewards[agent] = harvested;
  }

  for (std::size_t c = 0; c < m; ++c) {
    bool tended = roles[c] == kWorker;
    for (auto n : topo.neighbors(c)) tended |= roles[n] == kWorker;
    const double rate = cfg.growth_rate + (tended ? cfg.worker_bonus : 0.0);
    stock[c] = logistic_step(stock[c], rate, cfg.carrying_cap);
  }
}

void game_step(GridWorld& world, const GameConfig& game, Rng& rng) {
  if (const auto* s = std::get_if<SettlementConfig>(&game)) {
    settlement_step(world, *s, rng);
  } else {
    pasture_step(world, std::get<PastureConfig>(game), rng);
  }
}

void reset(GridWorld& world, const GameConfig& game) {
  if (const auto* p = std::get_if<PastureConfig>(&game)) {
    world.reset(p->initial_stock);
  } else {
    world.reset(0.0);
  }
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> v;
    const std::array<std::array<double, 2>, 5> settlement{{{0, 0}, {6, 0}, {0, 1}, {3.2, 0.5}, {6, 1}}};
    for (std::size_t i = 0; i < settlement.size(); ++i) {
      SettlementConfig cfg;
      cfg.waste_max = settlement[i][0];
      cfg.attack_p = settlement[i][1];
      v.push_back({"settlement-env" + std::to_string(i + 1), cfg});
    }
    // (w, c) pairs
    const std::array<std::array<double, 2>, 5> pasture{{{0, 0}, {0.5, 0}, {0, 0.5}, {0.27, 0.27}, {0.5, 0.5}}};
    for (std::size_t i = 0; i < pasture.size(); ++i) {
      PastureConfig cfg;
      cfg.worker_bonus = pasture[i][0];
      cfg.growth_rate = pasture[i][1];
      v.push_back({"pasture-env" + std::to_string(i + 1), cfg});
    }
    return v;
  }();
  return all;
}

const Preset& find_preset(const std::string& id) {
  for (const auto& p : presets()) {
    if (p.id == id) return p;
  }
  throw ConfigError("unknown environment preset '" + id + "'");
}

nlohmann::json game_to_json(const GameConfig& game) {
  if (const auto* s = std::get_if<SettlementConfig>(&game)) {
    return {{"type", "settlement"},          {"waste_max", s->waste_max},
            {"waste_rate", s->waste_rate},   {"attack_p", s->attack_p},
            {"forager_pay", s->forager_pay}, {"hunter_pay", s->hunter_pay},
            {"hunter_quorum", s->hunter_quorum}};
  }
  const auto& p = std::get<PastureConfig>(game);
  return {{"type", "pasture"},
          {"growth_rate", p.growth_rate},
          {"worker_bonus", p.worker_bonus},
          {"carrying_cap", p.carrying_cap},
          {"initial_stock", p.initial_stock},
          {"greedy_take", p.greedy_take},
          {"considerate_take", p.considerate_take},
          {"harvest_own_cell", p.harvest_own_cell}};
}

namespace {

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

GameConfig game_from_json(const nlohmann::json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    static const std::set<std::string> settlement_keys{
        "type", "id", "waste_max", "waste_rate", "attack_p", "forager_pay", "hunter_pay", "hunter_quorum"};
    static const std::set<std::string> pasture_keys{
        "type",        "id",         "growth_rate",      "worker_bonus",    "carrying_cap",
        "initial_stock", "greedy_take", "considerate_take", "harvest_own_cell"};
    const auto& known = type == "pasture" ? pasture_keys : settlement_keys;
    for (const auto& [key, value] : j.items()) {
      if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + type + " game block");
    }
    GameConfig game;
    if (type == "settlement") {
      SettlementConfig s;
      read_field(j, "waste_max", s.waste_max);
      read_field(j, "waste_rate", s.waste_rate);
      read_field(j, "attack_p", s.attack_p);
      read_field(j, "forager_pay", s.forager_pay);
      read_field(j, "hunter_pay", s.hunter_pay);
      read_field(j, "hunter_quorum", s.hunter_quorum);
      game = s;
    } else if (type == "pasture") {
      PastureConfig p;
      read_field(j, "growth_rate", p.growth_rate);
      read_field(j, "worker_bonus", p.worker_bonus);
      read_field(j, "carrying_cap", p.carrying_cap);
      read_field(j, "initial_stock", p.initial_stock);
      read_field(j, "greedy_take", p.greedy_take);
      read_field(j, "considerate_take", p.considerate_take);
      read_field(j, "harvest_own_cell", p.harvest_own_cell);
      game = p;
    } else {
      throw ConfigError("game.type must be 'settlement' or 'pasture', got '" + type + "'");
    }
    validate(game);
    return game;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed game block: ") + e.what());
  }
}

}  // namespace normlab
