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

#include "normlab/episode.hpp"

#include <array>
#include <cstdio>
#include <numeric>

#include "normlab/error.hpp"

namespace normlab {

void EpisodeConfig::validate() const {
  if (steps < 1) throw ConfigError("episode.steps must be >= 1");
  if (score_from < 1 || score_from > steps) throw ConfigError("episode.score_from must be in [1, steps]");
  if (eval_repeats < 1) throw ConfigError("episode.eval_repeats must be >= 1");
  if (dims.rows < 3 || dims.cols < 3) throw ConfigError("episode grid must be at least 3x3");
}

namespace {

StepStats step_stats(int t, const GridWorld& world) {
  StepStats s;
  s.t = t;
  const auto rewards = world.rewards();
  s.mean_reward = std::accumulate(rewards.begin(), rewards.end(), 0.0) / static_cast<double>(world.size());
  s.role_counts.assign(world.role_count(), 0);
  for (auto r : world.roles()) ++s.role_counts[r];
  const auto env = world.env();
  s.env_total = std::accumulate(env.begin(), env.end(), 0.0);
  return s;
}

double group_mean(std::span<const double> rewards) {
  return std::accumulate(rewards.begin(), rewards.end(), 0.0) / static_cast<double>(rewards.size());
}

}  // namespace

EpisodeResult run_episode(GridWorld& world, const GameConfig& game, Norm* norm,
                          const LearnerConfig& learner, const EpisodeConfig& episode,
                          Rng& rng, bool record_trace) {
  require(world.role_count() == roles_for(game).size(), "world role count does not match game");
  const std::size_t m = world.size();
  auto roles = world.roles();
  auto rewards = world.rewards();
  const auto& topo = world.topology();

  EpisodeResult result;
  if (record_trace) result.trace.reserve(static_cast<std::size_t>(episode.steps));
  std::vector<double> blended;
  if (learner.omega > 0.0) blended.resize(m);

  double scored_sum = 0.0;
  for (int t = 1; t <= episode.steps; ++t) {
    for (std::size_t i = 0; i < m; ++i) roles[i] = select_role(world.q(i), learner.epsilon, rng);
    game_step(world, game, rng);
    apply_sanctions(world, norm, rng, episode.sanction_mode);

    if (learner.omega > 0.0) {
      for (std::size_t i = 0; i < m; ++i) {
        std::array<double, 8> around{};
        const auto& ns = topo.neighbors(i);
        for (std::size_t a = 0; a < ns.size(); ++a) around[a] = rewards[ns[a]];
        blended[i] = blended_reward(rewards[i], around, learner.omega);
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      double& q = world.q(i)[roles[i]];
      q = update_value(q, learner.omega > 0.0 ? blended[i] : rewards[i], learner.alpha);
    }

    if (t >= episode.score_from) scored_sum += group_mean(rewards);
    if (record_trace) result.trace.push_back(step_stats(t, world));
  }
  result.score = scored_sum / static_cast<double>(episode.steps - episode.score_from + 1);
  result.final_roles.assign(roles.begin(), roles.end());
  return result;
}

EvalResult eval_norm(Norm* norm, const GameConfig& game, const LearnerConfig& learner,
                     const EpisodeConfig& episode, std::uint64_t seed) {
  require(episode.eval_repeats >= 1, "eval_norm needs at least one repeat");
  EvalResult out;
  GridWorld world(episode.dims, roles_for(game).size());
  for (int rep = 0; rep < episode.eval_repeats; ++rep) {
    reset(world, game);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
    auto res = run_episode(world, game, norm, learner, episode, rng);
    out.repeat_scores.push_back(res.score);
    if (rep == 0) out.final_roles = std::move(res.final_roles);
  }
  out.score = std::accumulate(out.repeat_scores.begin(), out.repeat_scores.end(), 0.0) /
              static_cast<double>(out.repeat_scores.size());
  return out;
}

std::string episode_trace_csv(const EpisodeResult& result, const RoleSet& roles) {
  std::string out = "t,mean_reward";
  for (const auto& name : roles.names()) out += "," + name;
  out += ",env_total\n";
  char buf[64];
  for (const auto& st : result.trace) {
    require(st.role_counts.size() == roles.size(), "trace row does not match the role set");
    std::snprintf(buf, sizeof buf, "%d,%.17g", st.t, st.mean_reward);
    out += buf;
    for (int c : st.role_counts) out += "," + std::to_string(c);
    std::snprintf(buf, sizeof buf, ",%.17g\n", st.env_total);
    out += buf;
  }
  return out;
}

double play_fixed_roles(const std::vector<RoleId>& roles, const GameConfig& game,
                        const EpisodeConfig& episode, Rng& rng) {
  const std::size_t k = roles_for(game).size();
  GridWorld world(episode.dims, k);
  require(roles.size() == world.size(), "role grid does not match world size");
  reset(world, game);
  std::copy(roles.begin(), roles.end(), world.roles().begin());
  double scored_sum = 0.0;
  for (int t = 1; t <= episode.steps; ++t) {
    game_step(world, game, rng);
    if (t >= episode.score_from) scored_sum += group_mean(world.rewards());
  }
  return scored_sum / static_cast<double>(episode.steps - episode.score_from + 1);
}

}  // namespace normlab
