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

#include "corrdp/correlation.h"
#include "corrdp/sampler.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace corrdp {
namespace {

TEST(Grid2DTest, RejectsBadInput) {
  SeededRng rng(1);
  EXPECT_FALSE(Sample2D(1, 1, 0.0, rng).ok());
  EXPECT_FALSE(Sample2D(-1, 1, 1.0, rng).ok());
  EXPECT_FALSE(Sample2D(20, 20, 1.0, rng).ok());
}

TEST(Grid2DTest, AdditiveAlongBothAxes) {
  SeededRng rng(3);
  absl::StatusOr<NoiseGrid2D> g = Sample2D(3, 4, 2.0, rng);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->row_nodes(), 15u);
  EXPECT_EQ(g->col_nodes(), 31u);
  for (std::size_t i = 0; i < g->row_nodes(); ++i) {
    for (std::size_t j = 0; j < g->col_nodes(); ++j) {
      if (2 * i + 2 < g->row_nodes()) {
        EXPECT_NEAR((*g)(i, j), (*g)(2 * i + 1, j) + (*g)(2 * i + 2, j), 1e-9);
      }
      if (2 * j + 2 < g->col_nodes()) {
        EXPECT_NEAR((*g)(i, j), (*g)(i, 2 * j + 1) + (*g)(i, 2 * j + 2), 1e-9);
      }
    }
  }
  double total = 0.0;
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 16; ++c) total += g->cell(r, c);
  }
  EXPECT_NEAR(total, (*g)(0, 0), 1e-9);
}

TEST(Grid2DTest, DegenerateRowTreeIsOneDimensional) {
  SeededRng a(6), b(6);
  absl::StatusOr<NoiseGrid2D> g = Sample2D(0, 3, 1.0, a);
  absl::StatusOr<NoiseTree> t = CascadeSample(3, 1.0, b);
  ASSERT_TRUE(g.ok() && t.ok());
  for (std::size_t j = 0; j < 15; ++j) EXPECT_EQ((*g)(0, j), (*t)[j]);
}

// Cells of a 2x2 table are jointly N(0, C_1 (x) C_1), every node pair has
// unit variance.
TEST(Grid2DTest, TwoByTwoLaw) {
  const int reps = 200000;
  oracle::CovarianceAccumulator cells(4);
  oracle::CovarianceAccumulator pairs(9);
  SeededRng rng(10);
  for (int r = 0; r < reps; ++r) {
    absl::StatusOr<NoiseGrid2D> g = Sample2D(1, 1, 1.0, rng);
    ASSERT_TRUE(g.ok());
    const double c[4] = {g->cell(0, 0), g->cell(0, 1), g->cell(1, 0),
                         g->cell(1, 1)};
    cells.Add(c);
    pairs.Add(g->values());
  }
  const DenseMatrix c1 = *BuildCorrelation(1);
  const DenseMatrix est = cells.Covariance();
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const double want = c1(a / 2, b / 2) * c1(a % 2, b % 2);
      EXPECT_NEAR(est(a, b), want, 0.015) << a << "," << b;
    }
  }
  const DenseMatrix p = pairs.Covariance();
  for (std::size_t m = 0; m < 9; ++m) {
    EXPECT_NEAR(p(m, m), 1.0, 5 * oracle::VarianceStdError(1.0, reps));
  }
}

}  // namespace
}  // namespace corrdp
