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

#include "normlab/ga.hpp"

#include <algorithm>

#include "normlab/error.hpp"

namespace normlab {

void GaConfig::validate() const {
  if (pop_size < 2) throw ConfigError("ga.pop_size must be >= 2");
  if (generations < 0) throw ConfigError("ga.generations must be >= 0");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw ConfigError("ga.crossover_rate must be in [0, 1]");
  if (!(mutation_p >= 0.0 && mutation_p <= 1.0)) throw ConfigError("ga.mutation_p must be in [0, 1]");
}

std::vector<GaIndividual> next_generation(const std::vector<GaIndividual>& population,
                                          std::size_t role_count, const GaConfig& ga,
                                          const GaEvaluator& evaluate, Rng& rng) {
  require(population.size() >= 2, "GA population needs at least 2 members");
  const std::size_t target = population.size();
  std::vector<GaIndividual> pool = population;
  std::vector<GaIndividual> offspring;
  while (offspring.size() < target) {
    auto a = population[uniform_index(rng, target)].genes;
    auto b = population[uniform_index(rng, target)].genes;
    if (uniform01(rng) < ga.crossover_rate) {
      for (std::size_t g = 0; g < a.size(); ++g) {
        if (uniform01(rng) < 0.5) std::swap(a[g], b[g]);
      }
    }
    for (auto* child : {&a, &b}) {
      for (auto& gene : *child) {
        if (uniform01(rng) < ga.mutation_p) gene = uniform_index(rng, role_count);
      }
    }
    offspring.push_back({std::move(a), 0.0});
    if (offspring.size() < target) offspring.push_back({std::move(b), 0.0});
  }
  for (auto& child : offspring) child.fitness = evaluate(child.genes);
  pool.insert(pool.end(), std::make_move_iterator(offspring.begin()),
              std::make_move_iterator(offspring.end()));
  std::stable_sort(pool.begin(), pool.end(),
                   [](const GaIndividual& x, const GaIndividual& y) { return x.fitness > y.fitness; });
  pool.resize(target);
  return pool;
}

RunRecord global_ga(const RunSetup& setup, const GaConfig& ga, std::uint64_t seed) {
  validate(setup.game);
  setup.episode.validate();
  ga.validate();

  RunRecord record;
  record.mode = "global";
  record.env_id = setup.env_id;
  record.seed = seed;
  record.config = setup_to_json(setup);
  record.config["ga"] = {{"pop_size", ga.pop_size},
                         {"generations", ga.generations},
                         {"crossover_rate", ga.crossover_rate},
                         {"mutation_p", ga.mutation_p}};
  record.config_hash = config_hash(record.config);
  record.roles = roles_for(setup.game);
  record.grid_rows = setup.episode.dims.rows;
  record.grid_cols = setup.episode.dims.cols;

  const std::size_t k = record.roles.size();
  const std::size_t cells = setup.episode.dims.cells();
  Rng rng(derive_seed(seed, "global"));
  std::uint64_t evaluations = 0;
  auto score = [&](const std::vector<RoleId>& genes, std::uint64_t eval_seed) {
    double total = 0.0;
    for (int rep = 0; rep < setup.episode.eval_repeats; ++rep) {
      Rng play(derive_seed(eval_seed, static_cast<std::uint64_t>(rep)));
      total += play_fixed_roles(genes, setup.game, setup.episode, play);
    }
    return total / setup.episode.eval_repeats;
  };
  GaEvaluator evaluate = [&](const std::vector<RoleId>& genes) {
    return score(genes, derive_seed(seed, "ga-eval", evaluations++));
  };

  std::vector<GaIndividual> population(static_cast<std::size_t>(ga.pop_size));
  for (auto& ind : population) {
    ind.genes.resize(cells);
    for (auto& g : ind.genes) g = uniform_index(rng, k);
  }
  for (auto& ind : population) ind.fitness = evaluate(ind.genes);
  std::stable_sort(population.begin(), population.end(),
                   [](const GaIndividual& x, const GaIndividual& y) { return x.fitness > y.fitness; });
  record.trace.push_back({0, population.front().fitness, population.front().fitness, 0});

  for (int gen = 1; gen <= ga.generations; ++gen) {
    population = next_generation(population, k, ga, evaluate, rng);
    record.trace.push_back({gen, population.front().fitness, population.front().fitness, 0});
  }

  const auto& best = population.front();
  record.final_roles = best.genes;
  record.payoff = best.fitness;
  record.fitness = best.fitness;
  record.validation_payoff = score(best.genes, derive_seed(seed, "validate"));
  return record;
}

}  // namespace normlab
