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

#include "corrdp/scaling.h"

#include <cmath>

#include "gtest/gtest.h"

namespace corrdp {
namespace {

TEST(ScalingTest, FitLineExact) {
  const double xs[] = {1, 2, 3, 4};
  const double ys[] = {3, 5, 7, 9};
  const LineFit f = FitLine(xs, ys);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.intercept, 1.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
}

TEST(ScalingTest, RunsAndValidates) {
  absl::StatusOr<ScalingResult> r = RunScaling(4, 8, 2, 1);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->points.size(), 5u);
  EXPECT_EQ(r->points[0].n, 16u);
  for (const ScalingPoint& p : r->points) EXPECT_GT(p.seconds, 0.0);
  EXPECT_FALSE(RunScaling(8, 4, 1, 1).ok());
  EXPECT_FALSE(RunScaling(4, 26, 1, 1).ok());
  EXPECT_FALSE(RunScaling(4, 8, 0, 1).ok());
}

}  // namespace
}  // namespace corrdp
