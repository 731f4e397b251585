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

#include "normlab/norm.hpp"
#include "normlab/rng.hpp"
#include "normlab/world.hpp"

namespace normlab {

enum class SanctionMode {
  /// Transfers are capped by the payer's balance; zero-sum, never negative.
  kClamped,
  /// Transfers fire only when the amount is at least the payer's balance and
  /// are not capped. Kept for ablations; rewards can go negative.
  kLiteral,
};

/// Stage II. Agents are visited in a shuffled order and each visits its 8
/// neighbours in a shuffled order; the focal agent's role picks the row and
/// the neighbour's role the column. Every consulted nonzero rule bumps its
/// usage counter. With `norm == nullptr` the shuffles still consume their
/// draws but no transfer happens.
///
/// Throws ContractViolation if any input reward is negative (clamped mode).
void apply_sanctions(GridWorld& world, Norm* norm, Rng& rng,
                     SanctionMode mode = SanctionMode::kClamped);

}  // namespace normlab
