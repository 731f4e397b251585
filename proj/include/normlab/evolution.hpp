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
#include <string>

#include "normlab/episode.hpp"
#include "normlab/norm.hpp"
#include "normlab/record.hpp"

namespace normlab {

struct EvoConfig {
  double lambda = 0.2;  // complexity weight
  double mp = 0.5;      // probability of Gaussian perturbation
  double mr = 0.5;      // its standard deviation
  double rap = 0.5;     // rule addition probability
  double rdp = 0.1;     // rule deletion probability
  int max_iter = 3000;

  void validate() const;
};

/// Returns a perturbed copy with usage counters cleared. Operators:
/// Gaussian noise on every rule (prob mp, clamped to the bound), add a
/// N(0,1) rule at a random empty cell (prob rap), delete a random rule
/// (prob rdp). Redraws until at least one operator applied; an operator with
/// no eligible cell is skipped. Returns an unchanged copy only when no
/// operator can ever apply.
Norm perturb_norm(const Norm& n, const EvoConfig& evo, Rng& rng);

/// Zeroes every rule whose usage counter is 0.
Norm prune_unused(const Norm& n);

inline double fitness(double payoff, const Norm& n, double lambda) {
  return payoff - lambda * static_cast<double>(l0_size(n));
}

/// Everything a single run needs besides its seed.
struct RunSetup {
  std::string env_id;
  GameConfig game;
  LearnerConfig learner;
  EpisodeConfig episode;
  EvoConfig evo;
};

nlohmann::json setup_to_json(const RunSetup& setup);

/// Called after every iteration with the incumbent's trace point.
using ProgressFn = std::function<void(const TracePoint&)>;

/// (1+1) hill climbing over norms: perturb, evaluate, prune unused rules,
/// accept on strictly greater Ft = R - lambda * L0.
RunRecord evolve_norm(const RunSetup& setup, std::uint64_t seed,
                      const ProgressFn& progress = {});

enum class BaselineMode { kSelfish, kAltruist, kSelfishAltruist };

double omega_for(BaselineMode mode);
std::string to_string(BaselineMode mode);
/// Throws ConfigError for anything but selfish|altruist|selfish_altruist.
BaselineMode parse_baseline_mode(const std::string& s);

/// Learning without sanctions, omega fixed by the mode. Scored like
/// eval_norm with a null norm.
RunRecord run_baseline(BaselineMode mode, const RunSetup& setup, std::uint64_t seed);

}  // namespace normlab
