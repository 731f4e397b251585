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

#include "normlab/svg.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "normlab/error.hpp"

namespace normlab {

namespace {

constexpr std::array<const char*, 8> kPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
};
constexpr int kCell = 24;
constexpr int kLegendRow = 20;

}  // namespace

std::string render_role_grid(const std::vector<RoleId>& grid, Dims dims, const RoleSet& roles,
                             const std::string& note) {
  require(grid.size() == dims.cells(), "role grid does not match dims");
  require(roles.size() <= kPalette.size(), "too many roles for the palette");
  const int width = std::max(dims.cols * kCell, 160);
  const int height = dims.rows * kCell + 10 + static_cast<int>(roles.size()) * kLegendRow;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!note.empty()) out << "<!-- " << note << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g id=\"cells\" stroke=\"#ffffff\" stroke-width=\"1\">\n";
  for (int r = 0; r < dims.rows; ++r) {
    for (int c = 0; c < dims.cols; ++c) {
      const RoleId role = grid[static_cast<std::size_t>(r * dims.cols + c)];
      require(role < roles.size(), "role index out of range");
      out << "<rect x=\"" << c * kCell << "\" y=\"" << r * kCell << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\"" << kPalette[role] << "\" data-role=\""
          << roles.name(role) << "\"/>\n";
    }
  }
  out << "</g>\n<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  const int top = dims.rows * kCell + 10;
  for (RoleId role = 0; role < roles.size(); ++role) {
    const int y = top + static_cast<int>(role) * kLegendRow;
    out << "<rect x=\"0\" y=\"" << y << "\" width=\"14\" height=\"14\" fill=\"" << kPalette[role]
        << "\"/><text x=\"20\" y=\"" << y + 12 << "\">" << roles.display_name(role) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace normlab
