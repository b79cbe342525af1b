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

#include "corrdp/sampler.h"

#include <bit>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "corrdp/kernels.h"

namespace corrdp {

NoiseTree::NoiseTree(int depth, double sigma, std::uint64_t seed,
                     std::vector<double> values)
    : depth_(depth), sigma_(sigma), seed_(seed), values_(std::move(values)) {}

std::span<const double> NoiseTree::level(int l) const {
  const std::size_t begin = (std::size_t{1} << l) - 1;
  return std::span<const double>(values_).subspan(begin, std::size_t{1} << l);
}

std::string NoiseTree::Label(std::size_t m) {
  // Heap index m + 1 written in binary is "1" followed by the label.
  const std::size_t h = m + 1;
  std::string label;
  for (int bit = std::bit_width(h) - 2; bit >= 0; --bit) {
    label.push_back(((h >> bit) & 1) != 0 ? '1' : '0');
  }
  return label;
}

std::pair<double, double> SplitNode(double x, double y) {
  const double half = x * 0.5;
  const double shift = y * kernels::kSplitWeight;
  return {half + shift, half - shift};
}

absl::Status ValidateSigma(double sigma) {
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("sigma must be finite and positive, got ", sigma));
  }
  return absl::OkStatus();
}

absl::StatusOr<NoiseTree> CascadeSample(int depth, double sigma,
                                        SeededRng& rng, CascadeStats* stats) {
  if (absl::Status s = ValidateSigma(sigma); !s.ok()) return s;
  if (depth < 0 || depth > kMaxSampleDepth) {
    return absl::OutOfRangeError(absl::StrCat("depth ", depth,
                                              " outside [0, ",
                                              kMaxSampleDepth, "]"));
  }
  const kernels::KernelTable& k = kernels::ActiveKernels();
  const std::size_t leaves = std::size_t{1} << depth;
  std::vector<double> values(2 * leaves - 1);
  const std::uint64_t draws_before = rng.normals_drawn();
  values[0] = sigma * rng.StandardNormal();
  std::uint64_t ops = 1;

  // Draws for one level at a time, in node order.
  std::vector<double> y(leaves / 2 + (leaves == 1 ? 1 : 0));
  for (int l = 0; l < depth; ++l) {
    const std::size_t width = std::size_t{1} << l;
    std::span<double> draws(y.data(), width);
    rng.FillNormal(draws, sigma);
    k.split_interleaved(values.data() + (width - 1), draws.data(),
                        values.data() + (2 * width - 1), width);
    // Per node: scale the draw by sigma, halve the parent, weight the draw,
    // one add, one subtract.
    ops += 5 * width;
  }
  if (stats != nullptr) {
    stats->normal_draws = rng.normals_drawn() - draws_before;
    stats->arithmetic_ops = ops;
  }
  return NoiseTree(depth, sigma, rng.seed(), std::move(values));
}

}  // namespace corrdp
