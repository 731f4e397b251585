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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "normlab/rng.hpp"
#include "normlab/roles.hpp"

namespace normlab {

/// Sanction amounts are bounded to [-kSanctionBound, kSanctionBound].
inline constexpr double kSanctionBound = 6.0;

/// A social norm: the k x k sanction matrix (row = sanctioning role,
/// column = sanctioned role) plus per-rule usage counters.
///
/// A rule exists iff its entry is bitwise nonzero. Deleting a rule writes
/// exactly 0 and clears its counter.
class Norm {
 public:
  Norm() = default;
  explicit Norm(std::size_t k);
  Norm(std::size_t k, std::vector<double> values);

  std::size_t roles() const { return k_; }

  double at(RoleId from, RoleId to) const { return values_[from * k_ + to]; }
  void set(RoleId from, RoleId to, double v);

  std::uint64_t usage(RoleId from, RoleId to) const { return usage_[from * k_ + to]; }
  void count_use(RoleId from, RoleId to) { ++usage_[from * k_ + to]; }
  void reset_usage();

  const std::vector<double>& values() const { return values_; }
  const std::vector<std::uint64_t>& usage_counts() const { return usage_; }
  /// Row-major counters for hot loops that bump usage directly.
  std::uint64_t* usage_data() { return usage_.data(); }

  /// Replaces the counters wholesale (deserialization).
  void set_usage(std::vector<std::uint64_t> usage);

  friend bool operator==(const Norm&, const Norm&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<double> values_;
  std::vector<std::uint64_t> usage_;
};

/// Each entry is independently a rule with probability 1/2; rule values are
/// uniform on [-6, 6].
Norm random_norm(std::size_t k, Rng& rng);

/// Number of entries that are exactly nonzero.
std::size_t l0_size(const Norm& n);

/// "<Row> ought to encourage|discourage <Col> by <value>", one per rule,
/// row-major order, value to 2 decimals.
std::vector<std::string> render_rules(const Norm& n, const RoleSet& roles);

/// Zero/sign pattern, row-major, one of '+', '-', '0' per entry.
std::string sign_pattern(const Norm& n);

/// Human-readable sign pattern, e.g. "hunter->forager:-"; "empty" for no rules.
std::string describe_sign_pattern(const Norm& n, const RoleSet& roles);

nlohmann::json norm_to_json(const Norm& n, const RoleSet& roles);
/// Parses {roles, matrix, usage}; `usage` is optional. Throws ConfigError.
Norm norm_from_json(const nlohmann::json& j, const RoleSet& roles);

}  // namespace normlab
