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

#include <chrono>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "corrdp/random.h"
#include "corrdp/sampler.h"

namespace corrdp {

LineFit FitLine(std::span<const double> xs, std::span<const double> ys) {
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return {slope, my - slope * mx, r2};
}

absl::StatusOr<ScalingResult> RunScaling(int min_depth, int max_depth,
                                         int repeats, std::uint64_t seed) {
  if (min_depth < 0 || min_depth > max_depth || max_depth > 25) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need 0 <= min_depth <= max_depth <= 25, got ", min_depth, "..",
        max_depth));
  }
  if (repeats < 1) return absl::InvalidArgumentError("repeats must be >= 1");
  ScalingResult result;
  std::vector<double> log_n, log_t;
  for (int k = min_depth; k <= max_depth; ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < repeats; ++rep) {
      SeededRng rng(DeriveSeed(seed, static_cast<std::uint64_t>(k) * 1000 + rep));
      const auto start = std::chrono::steady_clock::now();
      absl::StatusOr<NoiseTree> tree = CascadeSample(k, 1.0, rng);
      const auto stop = std::chrono::steady_clock::now();
      if (!tree.ok()) return tree.status();
      best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    const std::uint64_t n = std::uint64_t{1} << k;
    result.points.push_back({k, n, best});
    log_n.push_back(std::log(static_cast<double>(n)));
    log_t.push_back(std::log(best));
  }
  result.log_log = result.points.size() >= 2
                       ? FitLine(log_n, log_t)
                       : LineFit{std::numeric_limits<double>::quiet_NaN(),
                                 std::numeric_limits<double>::quiet_NaN(), 1.0};
  return result;
}

}  // namespace corrdp
