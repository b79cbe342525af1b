//
// Copyright 2026 The corrdp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef CORRDP_GRID2D_H_
#define CORRDP_GRID2D_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "corrdp/random.h"

namespace corrdp {

// Noise for every pair (I, J) of a row-tree node I (depth row_depth) and a
// column-tree node J (depth col_depth), both in level order. Stored row-major
// by row node: value(I, J) = values[I * col_nodes + J]. Sums over children
// hold along both axes: X(I,J) = X(2I+1,J) + X(2I+2,J) = X(I,2J+1) + X(I,2J+2).
class NoiseGrid2D {
 public:
  NoiseGrid2D(int row_depth, int col_depth, std::vector<double> values);

  int row_depth() const { return row_depth_; }
  int col_depth() const { return col_depth_; }
  std::size_t row_nodes() const { return (std::size_t{2} << row_depth_) - 1; }
  std::size_t col_nodes() const { return (std::size_t{2} << col_depth_) - 1; }

  double operator()(std::size_t row_node, std::size_t col_node) const {
    return values_[row_node * col_nodes() + col_node];
  }
  std::span<const double> row(std::size_t row_node) const {
    return std::span<const double>(values_).subspan(row_node * col_nodes(),
                                                    col_nodes());
  }
  std::span<const double> values() const { return values_; }

  // Noise on leaf cell (r, c) of the 2^row_depth x 2^col_depth table.
  double cell(std::size_t r, std::size_t c) const {
    return (*this)((std::size_t{1} << row_depth_) - 1 + r,
                   (std::size_t{1} << col_depth_) - 1 + c);
  }

 private:
  int row_depth_;
  int col_depth_;
  std::vector<double> values_;
};

// Two-dimensional cascade. The root row (I = root) is a 1-D cascade over the
// column tree. Each internal row node I then draws an independent 1-D column
// cascade Y(I, .) and splits pointwise:
//   X(2I+1, J) = X(I, J)/2 + (sqrt(3)/2) Y(I, J)
//   X(2I+2, J) = X(I, J)/2 - (sqrt(3)/2) Y(I, J)
// Every node pair is marginally N(0, sigma^2). Linear in the number of pairs.
absl::StatusOr<NoiseGrid2D> Sample2D(int row_depth, int col_depth,
                                     double sigma, SeededRng& rng);

}  // namespace corrdp

#endif  // CORRDP_GRID2D_H_
