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

#include <string>
#include <vector>

#include "normlab/grid.hpp"
#include "normlab/roles.hpp"

namespace normlab {

/// One coloured square per cell plus a legend of every role. Output is a
/// pure function of the inputs. `note` is embedded as an XML comment.
std::string render_role_grid(const std::vector<RoleId>& grid, Dims dims,
                             const RoleSet& roles, const std::string& note = {});

}  // namespace normlab
