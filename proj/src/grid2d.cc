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

#include "corrdp/grid2d.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "corrdp/kernels.h"
#include "corrdp/sampler.h"

namespace corrdp {

NoiseGrid2D::NoiseGrid2D(int row_depth, int col_depth,
                         std::vector<double> values)
    : row_depth_(row_depth), col_depth_(col_depth), values_(std::move(values)) {}

absl::StatusOr<NoiseGrid2D> Sample2D(int row_depth, int col_depth,
                                     double sigma, SeededRng& rng) {
  if (absl::Status s = ValidateSigma(sigma); !s.ok()) return s;
  // The grid holds (2^(r+1) - 1) * (2^(c+1) - 1) values; cap the total depth.
  if (row_depth < 0 || col_depth < 0 ||
      row_depth + col_depth > kMaxSampleDepth - 2) {
    return absl::OutOfRangeError(absl::StrCat(
        "invalid grid depths (", row_depth, ", ", col_depth, ")"));
  }
  const std::size_t cols = (std::size_t{2} << col_depth) - 1;
  const std::size_t rows = (std::size_t{2} << row_depth) - 1;
  const std::size_t internal_rows = (std::size_t{1} << row_depth) - 1;
  std::vector<double> values(rows * cols);

  absl::StatusOr<NoiseTree> top = CascadeSample(col_depth, sigma, rng);
  if (!top.ok()) return top.status();
  std::copy(top->values().begin(), top->values().end(), values.begin());

  const kernels::KernelTable& k = kernels::ActiveKernels();
  for (std::size_t i = 0; i < internal_rows; ++i) {
    absl::StatusOr<NoiseTree> y = CascadeSample(col_depth, sigma, rng);
    if (!y.ok()) return y.status();
    k.split_planar(values.data() + i * cols, y->values().data(),
                   values.data() + (2 * i + 1) * cols,
                   values.data() + (2 * i + 2) * cols, cols);
  }
  return NoiseGrid2D(row_depth, col_depth, std::move(values));
}

}  // namespace corrdp
