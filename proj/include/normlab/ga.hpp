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
#include <functional>
#include <vector>

#include "normlab/evolution.hpp"

namespace normlab {

struct GaConfig {
  int pop_size = 50;
  int generations = 200;
  double crossover_rate = 0.9;
  double mutation_p = 0.01;  // per-gene re-roll probability

  void validate() const;
};

struct GaIndividual {
  std::vector<RoleId> genes;
  double fitness = 0.0;
};

using GaEvaluator = std::function<double(const std::vector<RoleId>&)>;

/// One generation: pop_size offspring from random parent pairs, then the best
/// pop_size of parents and offspring survive (stable on ties, parents first).
std::vector<GaIndividual> next_generation(const std::vector<GaIndividual>& population,
                                          std::size_t role_count, const GaConfig& ga,
                                          const GaEvaluator& evaluate, Rng& rng);

/// Elitist GA over fixed role grids (one role per cell, no learning).
/// Offspring come from uniform crossover of random parent pairs and per-gene
/// re-roll mutation; survivors are the best pop_size of parents and
/// offspring. The record's payoff is a fresh re-evaluation of the best grid.
RunRecord global_ga(const RunSetup& setup, const GaConfig& ga, std::uint64_t seed);

}  // namespace normlab
