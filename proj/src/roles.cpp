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

#include "normlab/roles.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "normlab/error.hpp"

namespace normlab {

RoleSet::RoleSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 2) throw ConfigError("a role set needs at least 2 roles");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw ConfigError("role labels must be unique");
}

RoleId RoleSet::index_of(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) throw ConfigError("unknown role '" + std::string(label) + "'");
  return static_cast<RoleId>(it - names_.begin());
}

std::string RoleSet::display_name(RoleId r) const {
  std::string s = name(r);
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

const RoleSet& settlement_roles() {
  static const RoleSet roles({"cleaner", "forager", "hunter", "soldier"});
  return roles;
}

const RoleSet& pasture_roles() {
  static const RoleSet roles({"considerate", "greedy", "worker"});
  return roles;
}

}  // namespace normlab
