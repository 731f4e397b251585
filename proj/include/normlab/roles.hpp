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
#include <string>
#include <string_view>
#include <vector>

namespace normlab {

using RoleId = std::size_t;

/// Ordered role vocabulary. Indices key the norm matrix and Q-tables.
class RoleSet {
 public:
  RoleSet() = default;
  explicit RoleSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(RoleId r) const { return names_.at(r); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `label`; throws ConfigError if unknown.
  RoleId index_of(std::string_view label) const;

  /// Label with its first letter upper-cased ("hunter" -> "Hunter").
  std::string display_name(RoleId r) const;

  friend bool operator==(const RoleSet&, const RoleSet&) = default;

 private:
  std::vector<std::string> names_;
};

namespace settlement {
inline constexpr RoleId kCleaner = 0;
inline constexpr RoleId kForager = 1;
inline constexpr RoleId kHunter = 2;
inline constexpr RoleId kSoldier = 3;
}  // namespace settlement

namespace pasture {
inline constexpr RoleId kConsiderate = 0;
inline constexpr RoleId kGreedy = 1;
inline constexpr RoleId kWorker = 2;
}  // namespace pasture

const RoleSet& settlement_roles();
const RoleSet& pasture_roles();

}  // namespace normlab
