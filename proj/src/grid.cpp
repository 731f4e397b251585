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

#include "normlab/grid.hpp"

#include "normlab/error.hpp"

namespace normlab {

namespace {

constexpr std::array<std::array<int, 2>, 8> kOffsets{{
    {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1},
}};

int wrap(int v, int n) { return ((v % n) + n) % n; }

void check_dims(Dims dims) {
  if (dims.rows < 3 || dims.cols < 3) {
    throw ConfigError("grid must be at least 3x3 for 8 distinct Moore neighbours, got " +
                      std::to_string(dims.rows) + "x" + std::to_string(dims.cols));
  }
}

}  // namespace

std::array<Coord, 8> moore_neighbors(Coord c, Dims dims) {
  check_dims(dims);
  std::array<Coord, 8> out{};
  for (std::size_t i = 0; i < kOffsets.size(); ++i) {
    out[i] = {wrap(c.row + kOffsets[i][0], dims.rows), wrap(c.col + kOffsets[i][1], dims.cols)};
  }
  return out;
}

Topology::Topology(Dims dims) : dims_(dims) {
  check_dims(dims);
  neighbors_.resize(dims.cells());
  for (std::size_t cell = 0; cell < neighbors_.size(); ++cell) {
    const auto around = moore_neighbors(coord(cell), dims);
    for (std::size_t i = 0; i < around.size(); ++i) neighbors_[cell][i] = index(around[i]);
  }
}

}  // namespace normlab
