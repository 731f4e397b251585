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

#include "normlab/evolution.hpp"

#include <algorithm>

#include "normlab/error.hpp"

namespace normlab {

void EvoConfig::validate() const {
  if (!(lambda >= 0.0)) throw ConfigError("evo.lambda must be >= 0");
  for (auto [name, p] : {std::pair{"evo.mp", mp}, {"evo.rap", rap}, {"evo.rdp", rdp}}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(name) + " must be in [0, 1]");
  }
  if (!(mr > 0.0)) throw ConfigError("evo.mr must be > 0");
  if (mp == 0.0 && rap == 0.0 && rdp == 0.0) {
    throw ConfigError("at least one of evo.mp, evo.rap, evo.rdp must be positive");
  }
  if (max_iter < 0) throw ConfigError("evo.max_iter must be >= 0");
}

namespace {

std::vector<std::size_t> cells_where(const Norm& n, bool nonzero) {
  std::vector<std::size_t> out;
  const auto& v = n.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((v[i] != 0.0) == nonzero) out.push_back(i);
  }
  return out;
}

}  // namespace

Norm perturb_norm(const Norm& n, const EvoConfig& evo, Rng& rng) {
  const std::size_t k = n.roles();
  const std::size_t rules = l0_size(n);
  const bool can_mutate = evo.mp > 0.0 && rules > 0;
  const bool can_add = evo.rap > 0.0 && rules < k * k;
  const bool can_delete = evo.rdp > 0.0 && rules > 0;

  Norm out(k, n.values());
  if (!can_mutate && !can_add && !can_delete) return out;

  auto bounded = [](double v) { return std::clamp(v, -kSanctionBound, kSanctionBound); };

  while (true) {
    Norm cand(k, n.values());
    int applied = 0;
    if (uniform01(rng) < evo.mp) {
      const auto live = cells_where(cand, true);
      for (auto c : live) cand.set(c / k, c % k, bounded(cand.values()[c] + evo.mr * standard_normal(rng)));
      applied += !live.empty();
    }
    if (uniform01(rng) < evo.rap) {
      const auto empty = cells_where(cand, false);
      if (!empty.empty()) {
        const auto c = empty[uniform_index(rng, empty.size())];
        cand.set(c / k, c % k, bounded(standard_normal(rng)));
        ++applied;
      }
    }
    if (uniform01(rng) < evo.rdp) {
      const auto live = cells_where(cand, true);
      if (!live.empty()) {
        const auto c = live[uniform_index(rng, live.size())];
        cand.set(c / k, c % k, 0.0);
        ++applied;
      }
    }
    if (applied > 0) return cand;
  }
}

Norm prune_unused(const Norm& n) {
  Norm out = n;
  for (RoleId i = 0; i < n.roles(); ++i) {
    for (RoleId j = 0; j < n.roles(); ++j) {
      if (n.usage(i, j) == 0) out.set(i, j, 0.0);
    }
  }
  return out;
}

namespace {

void validate_setup(const RunSetup& setup) {
  validate(setup.game);
  setup.learner.validate();
  setup.episode.validate();
  setup.evo.validate();
}

RunRecord blank_record(const std::string& mode, const RunSetup& setup, std::uint64_t seed) {
  RunRecord r;
  r.mode = mode;
  r.env_id = setup.env_id;
  r.seed = seed;
  r.config = setup_to_json(setup);
  r.config_hash = config_hash(r.config);
  r.roles = roles_for(setup.game);
  r.grid_rows = setup.episode.dims.rows;
  r.grid_cols = setup.episode.dims.cols;
  return r;
}

}  // namespace

nlohmann::json setup_to_json(const RunSetup& setup) {
  const auto& l = setup.learner;
  const auto& e = setup.episode;
  const auto& v = setup.evo;
  return {
      {"env_id", setup.env_id},
      {"game", game_to_json(setup.game)},
      {"learner", {{"alpha", l.alpha}, {"epsilon", l.epsilon}, {"omega", l.omega}}},
      {"episode",
       {{"steps", e.steps},
        {"score_from", e.score_from},
        {"eval_repeats", e.eval_repeats},
        {"rows", e.dims.rows},
        {"cols", e.dims.cols},
        {"sanction_mode", e.sanction_mode == SanctionMode::kClamped ? "clamped" : "literal"}}},
      {"evo",
       {{"lambda", v.lambda},
        {"mp", v.mp},
        {"mr", v.mr},
        {"rap", v.rap},
        {"rdp", v.rdp},
        {"max_iter", v.max_iter}}},
  };
}

RunRecord evolve_norm(const RunSetup& setup, std::uint64_t seed, const ProgressFn& progress) {
  validate_setup(setup);
  RunRecord record = blank_record("evolve", setup, seed);
  const double lambda = setup.evo.lambda;
  Rng rng(derive_seed(seed, "perturb"));

  // Evaluate with fresh counters, then drop the rules nobody consulted.
  auto evaluate = [&](Norm& cand, int iteration) {
    cand.reset_usage();
    auto res = eval_norm(&cand, setup.game, setup.learner, setup.episode,
                         derive_seed(seed, "eval", static_cast<std::uint64_t>(iteration)));
    cand = prune_unused(cand);
    return res;
  };

  Norm incumbent = random_norm(record.roles.size(), rng);
  auto first = evaluate(incumbent, 0);
  double payoff = first.score;
  double ft = fitness(payoff, incumbent, lambda);
  record.final_roles = std::move(first.final_roles);
  record.trace.push_back({0, ft, payoff, l0_size(incumbent)});
  if (progress) progress(record.trace.back());

  for (int it = 1; it <= setup.evo.max_iter; ++it) {
    Norm cand = perturb_norm(incumbent, setup.evo, rng);
    auto res = evaluate(cand, it);
    const double cand_ft = fitness(res.score, cand, lambda);
    if (cand_ft > ft) {
      incumbent = std::move(cand);
      ft = cand_ft;
      payoff = res.score;
      record.final_roles = std::move(res.final_roles);
    }
    record.trace.push_back({it, ft, payoff, l0_size(incumbent)});
    if (progress) progress(record.trace.back());
  }

  record.payoff = payoff;
  record.fitness = ft;
  Norm check(incumbent.roles(), incumbent.values());
  record.validation_payoff =
      eval_norm(&check, setup.game, setup.learner, setup.episode, derive_seed(seed, "validate")).score;
  record.final_norm = std::move(incumbent);
  return record;
}

double omega_for(BaselineMode mode) {
  switch (mode) {
    case BaselineMode::kSelfish: return 0.0;
    case BaselineMode::kAltruist: return 1.0;
    case BaselineMode::kSelfishAltruist: return 0.5;
  }
  return 0.0;
}

std::string to_string(BaselineMode mode) {
  switch (mode) {
    case BaselineMode::kSelfish: return "selfish";
    case BaselineMode::kAltruist: return "altruist";
    case BaselineMode::kSelfishAltruist: return "selfish_altruist";
  }
  return "selfish";
}

BaselineMode parse_baseline_mode(const std::string& s) {
  if (s == "selfish") return BaselineMode::kSelfish;
  if (s == "altruist") return BaselineMode::kAltruist;
  if (s == "selfish_altruist") return BaselineMode::kSelfishAltruist;
  throw ConfigError("unknown baseline mode '" + s + "'");
}

RunRecord run_baseline(BaselineMode mode, const RunSetup& setup, std::uint64_t seed) {
  RunSetup s = setup;
  s.learner.omega = omega_for(mode);
  validate_setup(s);
  RunRecord record = blank_record(to_string(mode), s, seed);
  auto res = eval_norm(nullptr, s.game, s.learner, s.episode, derive_seed(seed, "baseline"));
  record.payoff = res.score;
  record.fitness = res.score;
  record.final_roles = std::move(res.final_roles);
  record.trace.push_back({0, res.score, res.score, 0});
  record.validation_payoff =
      eval_norm(nullptr, s.game, s.learner, s.episode, derive_seed(seed, "validate")).score;
  return record;
}

}  // namespace normlab
