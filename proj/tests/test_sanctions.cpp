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

// Stage II redistribution.

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "normlab/error.hpp"
#include "normlab/sanctions.hpp"
#include "normlab/world.hpp"

using namespace normlab;

namespace {

// 3x3 torus: agent 0 has role 0, agent 1 role 1, everyone else role 2.
// Every agent neighbours every other, and only s[0][1] is nonzero, so the
// single rule fires exactly once per call.
GridWorld pair_world(double r0, double r1) {
  GridWorld w(Dims{3, 3}, 3);
  w.reset(0.0);
  for (auto& r : w.roles()) r = 2;
  w.roles()[0] = 0;
  w.roles()[1] = 1;
  for (auto& r : w.rewards()) r = 1.0;
  w.rewards()[0] = r0;
  w.rewards()[1] = r1;
  return w;
}

double total(const GridWorld& w) {
  return std::accumulate(w.rewards().begin(), w.rewards().end(), 0.0);
}

}  // namespace

TEST_CASE("encouragement moves the full amount when affordable") {
  auto w = pair_world(5.0, 1.0);
  Norm n(3);
  n.set(0, 1, 2.0);
  Rng rng(1);
  apply_sanctions(w, &n, rng);
  CHECK(w.rewards()[0] == 3.0);
  CHECK(w.rewards()[1] == 3.0);
  CHECK(total(w) == 13.0);
  CHECK(n.usage(0, 1) == 1);
}

TEST_CASE("punishment is capped by what the target holds") {
  auto w = pair_world(1.0, 0.5);
  Norm n(3);
  n.set(0, 1, -2.0);
  Rng rng(1);
  apply_sanctions(w, &n, rng);
  CHECK(w.rewards()[0] == 1.5);
  CHECK(w.rewards()[1] == 0.0);
}

TEST_CASE("an impoverished agent cannot encourage") {
  auto w = pair_world(0.0, 1.0);
  Norm n(3);
  n.set(0, 1, 4.0);
  Rng rng(1);
  apply_sanctions(w, &n, rng);
  CHECK(w.rewards()[0] == 0.0);
  CHECK(w.rewards()[1] == 1.0);
  CHECK(n.usage(0, 1) == 1);  // consulted even though nothing moved
}

TEST_CASE("zero and null norms leave rewards bit-identical and consume the same draws") {
  GridWorld a(Dims{10, 10}, 4), b(Dims{10, 10}, 4);
  a.reset(0.0);
  b.reset(0.0);
  Rng fill(3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a.roles()[i] = b.roles()[i] = uniform_index(fill, 4);
    a.rewards()[i] = b.rewards()[i] = 6.0 * uniform01(fill);
  }
  Norm zero(4);
  Rng ra(11), rb(11);
  apply_sanctions(a, &zero, ra);
  apply_sanctions(b, nullptr, rb);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.rewards()[i] == b.rewards()[i]);
  CHECK(ra == rb);
  CHECK(l0_size(zero) == 0);
}

TEST_CASE("random sanctions conserve the total and never go negative") {
  Rng gen(99);
  for (int call = 0; call < 200; ++call) {
    GridWorld w(Dims{10, 10}, 4);
    w.reset(0.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      w.roles()[i] = uniform_index(gen, 4);
      w.rewards()[i] = uniform01(gen) < 0.2 ? 0.0 : 6.0 * uniform01(gen);
    }
    Norm n = random_norm(4, gen);
    const double before = total(w);
    apply_sanctions(w, &n, gen);
    CHECK(std::abs(total(w) - before) <= 1e-9);
    for (double r : w.rewards()) CHECK(r >= 0.0);
  }
}

TEST_CASE("usage counts consultations of nonzero rules") {
  GridWorld w(Dims{10, 10}, 2);
  w.reset(0.0);
  for (auto& r : w.roles()) r = 0;
  for (auto& r : w.rewards()) r = 10.0;
  Norm n(2);
  n.set(0, 0, 0.1);
  n.set(1, 0, 0.1);  // no agent holds role 1
  Rng rng(4);
  apply_sanctions(w, &n, rng);
  CHECK(n.usage(0, 0) == 800);
  CHECK(n.usage(1, 0) == 0);
}

TEST_CASE("contract checks") {
  auto w = pair_world(1.0, 1.0);
  Norm wrong(4);
  Rng rng(1);
  CHECK_THROWS_AS(apply_sanctions(w, &wrong, rng), ContractViolation);
  w.rewards()[3] = -1.0;
  Norm ok(3);
  CHECK_THROWS_AS(apply_sanctions(w, &ok, rng), ContractViolation);
}

TEST_CASE("literal mode fires only when the amount covers the payer's balance") {
  Norm n(3);
  n.set(0, 1, 2.0);
  {
    auto w = pair_world(5.0, 1.0);
    Rng rng(1);
    apply_sanctions(w, &n, rng, SanctionMode::kLiteral);
    CHECK(w.rewards()[0] == 5.0);
  }
  {
    auto w = pair_world(1.5, 1.0);
    Rng rng(1);
    apply_sanctions(w, &n, rng, SanctionMode::kLiteral);
    CHECK(w.rewards()[0] == -0.5);
    CHECK(w.rewards()[1] == 3.0);
  }
}
