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

#include "corrdp/correlation.h"

#include <cmath>

#include "gtest/gtest.h"
#include "oracle.h"

namespace corrdp {
namespace {

TEST(CorrelationTest, DepthOneMatrices) {
  absl::StatusOr<DenseMatrix> c = BuildCorrelation(1);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ((*c)(0, 0), 1.0);
  EXPECT_EQ((*c)(0, 1), -0.5);
  EXPECT_EQ((*c)(1, 0), -0.5);
  EXPECT_EQ((*c)(1, 1), 1.0);

  absl::StatusOr<DenseMatrix> p = BuildPrecision(1);
  ASSERT_TRUE(p.ok());
  EXPECT_DOUBLE_EQ((*p)(0, 0), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ((*p)(0, 1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ((*p)(1, 1), 4.0 / 3.0);
}

TEST(CorrelationTest, DepthTwoMatchesHandExpansion) {
  absl::StatusOr<DenseMatrix> c = BuildCorrelation(2);
  ASSERT_TRUE(c.ok());
  const double want[4][4] = {{1, -0.5, -0.125, -0.125},
                             {-0.5, 1, -0.125, -0.125},
                             {-0.125, -0.125, 1, -0.5},
                             {-0.125, -0.125, -0.5, 1}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ((*c)(i, j), want[i][j]);
  }
}

TEST(CorrelationTest, RecursionMatchesClosedForm) {
  for (int k = 1; k <= 9; ++k) {
    absl::StatusOr<DenseMatrix> c = BuildCorrelation(k);
    ASSERT_TRUE(c.ok());
    EXPECT_EQ(c->MaxAbsDiff(oracle::ClosedFormCorrelation(k)), 0.0) << k;
  }
}

TEST(CorrelationTest, BasicProperties) {
  for (int k = 1; k <= 10; ++k) {
    absl::StatusOr<DenseMatrix> c = BuildCorrelation(k);
    ASSERT_TRUE(c.ok());
    const double row_target = std::ldexp(1.0, -k);
    for (std::size_t i = 0; i < c->dim(); ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < c->dim(); ++j) {
        sum += (*c)(i, j);
        EXPECT_EQ((*c)(i, j), (*c)(j, i));
        if (i != j) EXPECT_LT((*c)(i, j), 0.0);
      }
      EXPECT_NEAR(sum, row_target, 1e-12) << "k=" << k << " row " << i;
      EXPECT_EQ((*c)(i, i), 1.0);
    }
  }
}

TEST(CorrelationTest, PositiveDefinite) {
  for (int k = 1; k <= 8; ++k) {
    absl::StatusOr<DenseMatrix> c = BuildCorrelation(k);
    ASSERT_TRUE(c.ok());
    EXPECT_GT(oracle::MinEigenvalue(*c), 0.0) << k;
    EXPECT_GT(oracle::Cholesky(*c).dim(), 0u) << k;
  }
}

TEST(CorrelationTest, PrecisionIsInverse) {
  for (int k = 1; k <= 10; ++k) {
    absl::StatusOr<DenseMatrix> c = BuildCorrelation(k);
    absl::StatusOr<DenseMatrix> p = BuildPrecision(k);
    ASSERT_TRUE(c.ok() && p.ok());
    for (std::size_t i = 0; i < p->dim(); ++i) {
      EXPECT_NEAR((*p)(i, i), 1.0 + k / 3.0, 1e-12);
    }
    if (k <= 9) {
      EXPECT_LT(c->Multiply(*p).MaxAbsDiff(DenseMatrix::Identity(c->dim())),
                1e-9)
          << k;
    }
    EXPECT_DOUBLE_EQ(PrecisionDiagMax(k), 1.0 + k / 3.0);
  }
}

TEST(CorrelationTest, DepthOutOfRange) {
  EXPECT_EQ(BuildCorrelation(0).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(BuildCorrelation(13).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(BuildPrecision(-1).status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_EQ(BuildCorrelation(5, 4).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_TRUE(BuildCorrelation(5, 5).ok());
}

// Frozen from an independent numpy evaluation of max over all ranges of
// 1^T C_k[i..j, i..j] 1.
TEST(CorrelationTest, MaxRangeVarianceFrozen) {
  const double want[] = {1.0,
                         1.75,
                         2.4375,
                         3.109375,
                         3.77734375,
                         4.4443359375,
                         5.111083984375,
                         5.77777099609375,
                         6.4444427490234375,
                         7.111110687255859};
  for (int k = 1; k <= 10; ++k) {
    absl::StatusOr<double> v = MaxRangeVariance(k);
    ASSERT_TRUE(v.ok());
    EXPECT_NEAR(*v, want[k - 1], 1e-9) << k;
    if (k >= 2) EXPECT_LE(*v, 2.0 * k - 2.0);
  }
}

TEST(CorrelationTest, RangeTableMatchesDirectSum) {
  absl::StatusOr<DenseMatrix> c = BuildCorrelation(4);
  ASSERT_TRUE(c.ok());
  const RangeVarianceTable table(*c);
  for (std::size_t lo = 0; lo < 16; ++lo) {
    for (std::size_t hi = lo; hi < 16; ++hi) {
      double direct = 0.0;
      for (std::size_t i = lo; i <= hi; ++i) {
        for (std::size_t j = lo; j <= hi; ++j) direct += (*c)(i, j);
      }
      EXPECT_NEAR(table.RangeSum(lo, hi), direct, 1e-12);
    }
  }
  // A full subtree always has unit variance.
  EXPECT_NEAR(table.RangeSum(0, 15), 1.0, 1e-12);
  EXPECT_NEAR(table.RangeSum(8, 11), 1.0, 1e-12);
}

// Prefix of the first M_K leaves, M_K = 2^(K-1) + 2^(K-3) + ... + 1.
TEST(CorrelationTest, LowerBoundPrefixIncrements) {
  auto prefix_variance = [](int k) {
    std::size_t m = 0;
    for (int e = k - 1; e >= 0; e -= 2) m += std::size_t{1} << e;
    const DenseMatrix c = *BuildCorrelation(k);
    return RangeVarianceTable(c).RangeSum(0, m - 1);
  };
  EXPECT_NEAR(prefix_variance(1), 1.0, 1e-12);
  EXPECT_NEAR(prefix_variance(3), 1.75, 1e-12);
  EXPECT_NEAR(prefix_variance(5), 2.4375, 1e-12);
  EXPECT_NEAR(prefix_variance(7), 3.109375, 1e-12);
  for (int k = 3; k <= 9; k += 2) {
    EXPECT_GE(prefix_variance(k) - prefix_variance(k - 2), 2.0 / 3.0 - 1e-9);
  }
}

}  // namespace
}  // namespace corrdp
