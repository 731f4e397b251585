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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace normlab {

struct Dims {
  int rows = 10;
  int cols = 10;

  std::size_t cells() const { return static_cast<std::size_t>(rows) * cols; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

struct Coord {
  int row = 0;
  int col = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// The 8 Moore neighbours of `c` on a torus, in row-major offset order
/// (-1,-1), (-1,0), (-1,1), (0,-1), (0,1), (1,-1), (1,0), (1,1).
/// Throws ConfigError when dims are smaller than 3x3.
std::array<Coord, 8> moore_neighbors(Coord c, Dims dims);

/// Precomputed neighbour indices for every cell of a torus.
class Topology {
 public:
  using CellIndex = std::uint32_t;

  explicit Topology(Dims dims = {});

  Dims dims() const { return dims_; }
  std::size_t size() const { return neighbors_.size(); }

  const std::array<CellIndex, 8>& neighbors(std::size_t cell) const {
    return neighbors_[cell];
  }

  CellIndex index(Coord c) const {
    return static_cast<CellIndex>(c.row * dims_.cols + c.col);
  }
  Coord coord(std::size_t cell) const {
    return {static_cast<int>(cell) / dims_.cols, static_cast<int>(cell) % dims_.cols};
  }

 private:
  Dims dims_;
  std::vector<std::array<CellIndex, 8>> neighbors_;
};

}  // namespace normlab
