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

#include "corrdp/mechanism.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "corrdp/sampler.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace corrdp {
namespace {

CalibratedSigma Sigma(double s) { return {s, s * s, SigmaSource::kGeneral}; }

DataVector Data(std::vector<double> v) { return *DataVector::Create(v); }

TEST(MechanismTest, Names) {
  for (MechanismKind k : {MechanismKind::kCorrelated, MechanismKind::kIid,
                          MechanismKind::kBinaryTree}) {
    EXPECT_EQ(*ParseMechanism(MechanismName(k)), k);
  }
  EXPECT_FALSE(ParseMechanism("laplace").ok());
}

TEST(MechanismTest, DataValidation) {
  EXPECT_FALSE(DataVector::Create({}).ok());
  EXPECT_FALSE(DataVector::Create({1.0, NAN}).ok());
  EXPECT_FALSE(DataVector::Create({INFINITY}).ok());
  SeededRng rng(1);
  const DataVector d = DataVector::SyntheticUniform(5000, rng);
  for (double v : d.values()) {
    EXPECT_GE(v, 1.0);
    EXPECT_LE(v, 1000.0);
    EXPECT_EQ(v, std::floor(v));
  }
}

TEST(MechanismTest, ZeroDataReleasesLeafNoise) {
  SeededRng a(5), b(5);
  absl::StatusOr<PrivatizedVector> p =
      Perturb(Data(std::vector<double>(8, 0.0)), Sigma(2.0), a);
  absl::StatusOr<NoiseTree> t = CascadeSample(3, 2.0, b);
  ASSERT_TRUE(p.ok() && t.ok());
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(p->values()[i], t->leaves()[i]);
  EXPECT_EQ(p->meta().covariance, "C_3");
  EXPECT_EQ(p->meta().depth, 3);
  EXPECT_EQ(p->meta().seed, 5u);
}

// Noise does not depend on the data: shifting x shifts the output exactly.
TEST(MechanismTest, DataIndependentNoise) {
  std::vector<double> e1(8, 0.0);
  e1[0] = 1.0;
  SeededRng a(6), b(6);
  const PrivatizedVector p0 =
      *Perturb(Data(std::vector<double>(8, 0.0)), Sigma(1.0), a);
  const PrivatizedVector p1 = *Perturb(Data(e1), Sigma(1.0), b);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(p1.values()[i] - p0.values()[i], e1[i]);
  }
}

TEST(MechanismTest, PaddingTruncates) {
  SeededRng a(7), b(7);
  absl::StatusOr<PrivatizedVector> p =
      Perturb(Data(std::vector<double>(5, 10.0)), Sigma(1.0), a);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->size(), 5u);
  EXPECT_EQ(p->meta().padded_size, 8u);
  const NoiseTree t = *CascadeSample(3, 1.0, b);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(p->values()[i], 10.0 + t.leaves()[i]);
  }
  // Length one pads to nothing.
  SeededRng c(1);
  EXPECT_EQ(Perturb(Data({3.0}), Sigma(1.0), c)->meta().padded_size, 1u);
}

TEST(MechanismTest, AnswersAreConsistent) {
  SeededRng rng(8);
  const DataVector x = DataVector::SyntheticUniform(37, rng);
  const PrivatizedVector p = *Perturb(x, Sigma(50.0), rng);
  for (std::size_t lo = 0; lo < 37; ++lo) {
    for (std::size_t hi = lo; hi < 37; ++hi) {
      double direct = 0.0;
      for (std::size_t i = lo; i <= hi; ++i) direct += p.values()[i];
      EXPECT_NEAR(*AnswerRange(p, {lo, hi}), direct, 1e-9);
      for (std::size_t mid = lo; mid < hi; ++mid) {
        EXPECT_NEAR(p.Answer({lo, hi}), p.Answer({lo, mid}) + p.Answer({mid + 1, hi}),
                    1e-9);
      }
    }
  }
  EXPECT_FALSE(AnswerRange(p, {3, 2}).ok());
  EXPECT_FALSE(AnswerRange(p, {0, 37}).ok());
}

TEST(MechanismTest, Unbiased) {
  const std::vector<double> x = {5, 1, 9, 2, 7, 3};
  const int reps = 40000;
  std::vector<double> sum(x.size(), 0.0);
  SeededRng rng(9);
  for (int r = 0; r < reps; ++r) {
    const PrivatizedVector p = *Perturb(Data(x), Sigma(3.0), rng);
    for (std::size_t i = 0; i < x.size(); ++i) sum[i] += p.values()[i];
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_NEAR(sum[i] / reps, x[i], 5 * 3.0 / std::sqrt(reps));
  }
}

TEST(MechanismTest, GeneralTreePerturb) {
  SeededRng a(10), b(10);
  const GeneralTree tree = GeneralTree::Caterpillar(3);
  absl::StatusOr<PrivatizedVector> p =
      PerturbGeneralTree(Data({1, 2, 3, 4}), tree, Sigma(1.0), a);
  ASSERT_TRUE(p.ok());
  const std::vector<double> noise = *GeneralTreeSample(tree, 1.0, b);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(p->values()[i], (i + 1.0) + noise[tree.leaves()[i]]);
  }
  EXPECT_EQ(p->meta().covariance, "general_tree");
  EXPECT_FALSE(PerturbGeneralTree(Data({1, 2}), tree, Sigma(1.0), a).ok());
}

TEST(MechanismTest, DecomposeSmallExample) {
  EXPECT_EQ(*RangeDecompose(3, {0, 5}), (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(*RangeDecompose(3, {0, 7}), (std::vector<std::size_t>{0}));
  EXPECT_EQ(*RangeDecompose(3, {3, 3}), (std::vector<std::size_t>{10}));
  EXPECT_EQ(*RangeDecompose(3, {1, 6}),
            (std::vector<std::size_t>{8, 4, 5, 13}));
  EXPECT_FALSE(RangeDecompose(3, {0, 8}).ok());
  EXPECT_FALSE(RangeDecompose(-1, {0, 0}).ok());
}

TEST(MechanismTest, DecomposeExhaustive) {
  for (int k = 1; k <= 6; ++k) {
    const std::size_t n = std::size_t{1} << k;
    for (std::size_t lo = 0; lo < n; ++lo) {
      for (std::size_t hi = lo; hi < n; ++hi) {
        const std::vector<std::size_t> nodes = *RangeDecompose(k, {lo, hi});
        // Left to right, contiguous, exact cover.
        std::size_t next = lo;
        for (std::size_t m : nodes) {
          const int level = std::bit_width(m + 1) - 1;
          const std::size_t width = n >> level;
          const std::size_t start = (m + 1 - (std::size_t{1} << level)) * width;
          EXPECT_EQ(start, next);
          next = start + width;
        }
        EXPECT_EQ(next, hi + 1);
        if (k >= 2) EXPECT_LE(nodes.size(), 2u * k - 2);
        std::vector<std::size_t> sorted = nodes;
        std::sort(sorted.begin(), sorted.end());
        if (k <= 4) {
          EXPECT_EQ(sorted, oracle::BruteForceMinimalCover(k, lo, hi));
        }
      }
    }
  }
}

TEST(MechanismTest, CeilLog2) {
  EXPECT_EQ(CeilLog2(1), 0);
  EXPECT_EQ(CeilLog2(2), 1);
  EXPECT_EQ(CeilLog2(5), 3);
  EXPECT_EQ(CeilLog2(1024), 10);
  EXPECT_EQ(CeilLog2(1025), 11);
}

}  // namespace
}  // namespace corrdp
