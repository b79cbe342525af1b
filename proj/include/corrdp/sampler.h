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

#ifndef CORRDP_SAMPLER_H_
#define CORRDP_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "corrdp/random.h"

namespace corrdp {

// Deepest perfect tree the samplers will allocate (2^31 - 1 nodes).
inline constexpr int kMaxSampleDepth = 30;

// Noise on every node of a perfect binary tree of the given depth, stored in
// level order: node m has children 2m+1 and 2m+2, level l occupies
// [2^l - 1, 2^(l+1) - 1), and the 2^depth leaves are the last level. Every
// internal value equals the sum of its two children up to rounding.
class NoiseTree {
 public:
  NoiseTree(int depth, double sigma, std::uint64_t seed,
            std::vector<double> values);

  int depth() const { return depth_; }
  double sigma() const { return sigma_; }
  std::uint64_t seed() const { return seed_; }

  std::size_t node_count() const { return values_.size(); }
  std::size_t leaf_count() const { return std::size_t{1} << depth_; }

  std::span<const double> values() const { return values_; }
  std::span<const double> leaves() const {
    return std::span<const double>(values_).subspan(leaf_count() - 1);
  }
  std::span<const double> level(int l) const;
  double root() const { return values_.front(); }
  double operator[](std::size_t m) const { return values_[m]; }

  // Bit-string label of node m ("" for the root, "01" for the second node on
  // level 2). Debug output only.
  static std::string Label(std::size_t m);

 private:
  int depth_;
  double sigma_;
  std::uint64_t seed_;
  std::vector<double> values_;
};

// Splits a parent value x with an independent draw y into two children that
// sum to x: (x/2 + (sqrt(3)/2) y, x/2 - (sqrt(3)/2) y).
std::pair<double, double> SplitNode(double x, double y);

// Work counters filled in by CascadeSample.
struct CascadeStats {
  std::uint64_t normal_draws = 0;
  std::uint64_t arithmetic_ops = 0;
};

absl::Status ValidateSigma(double sigma);

// Top-down cascade: root ~ N(0, sigma^2), then for each level in order one
// fresh N(0, sigma^2) draw per node splits it into its children. The leaves
// are jointly N(0, sigma^2 C_depth); every node is marginally N(0, sigma^2).
// Uses 2^depth draws and 5 arithmetic operations per internal node.
absl::StatusOr<NoiseTree> CascadeSample(int depth, double sigma,
                                        SeededRng& rng,
                                        CascadeStats* stats = nullptr);

}  // namespace corrdp

#endif  // CORRDP_SAMPLER_H_
