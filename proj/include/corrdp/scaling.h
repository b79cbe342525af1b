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

#ifndef CORRDP_SCALING_H_
#define CORRDP_SCALING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace corrdp {

// Ordinary least squares y = intercept + slope * x.
struct LineFit {
  double slope;
  double intercept;
  double r_squared;
};

LineFit FitLine(std::span<const double> xs, std::span<const double> ys);

struct ScalingPoint {
  int depth;
  std::uint64_t n;
  double seconds;  // best of the repeats
};

struct ScalingResult {
  std::vector<ScalingPoint> points;
  // Fit of log(seconds) on log(n).
  LineFit log_log;
};

// Wall-clock cost of CascadeSample(k, 1.0) for k = min_depth..max_depth,
// best of `repeats` runs on the monotonic clock.
absl::StatusOr<ScalingResult> RunScaling(int min_depth, int max_depth,
                                         int repeats, std::uint64_t seed);

}  // namespace corrdp

#endif  // CORRDP_SCALING_H_
