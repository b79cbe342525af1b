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

#ifndef CORRDP_STREAM_H_
#define CORRDP_STREAM_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "corrdp/random.h"

namespace corrdp {

// Incremental cascade for streams of unknown length. After 2^k elements the
// emitted leaf noises are jointly N(0, sigma^2 C_k), exactly as if the whole
// tree had been sampled top-down.
//
// When the current tree is full, it becomes the left child X0 of a new root;
// the right sibling is drawn conditionally as X1 = -X0/2 + (sqrt(3)/2) Y and
// the new root is X0 + X1. Only the path from X1 down to the next leaf is
// materialized; unexpanded right siblings wait on a stack. Amortized O(1),
// worst case O(log n) per element.
//
// sigma is supplied by the caller. No privacy accounting is attached to tree
// growth.
class StreamSampler {
 public:
  static absl::StatusOr<StreamSampler> Create(double sigma);

  // Leaf noise for the next stream position.
  double Next(SeededRng& rng);

  double sigma() const { return sigma_; }
  // Elements emitted so far.
  std::uint64_t count() const { return count_; }
  // Leaves in the current tree (0 before the first element, then 2^depth).
  std::uint64_t capacity() const { return capacity_; }
  int depth() const { return depth_; }
  // Noise on the root of the current tree.
  double root_value() const { return root_; }
  // Subtree roots on the path to the next leaf that are not yet expanded.
  std::size_t pending() const { return pending_.size(); }

 private:
  struct Subtree {
    double value;
    int height;
  };

  explicit StreamSampler(double sigma) : sigma_(sigma) {}

  void Grow(SeededRng& rng);

  double sigma_;
  std::uint64_t count_ = 0;
  std::uint64_t capacity_ = 0;
  int depth_ = 0;
  double root_ = 0.0;
  // Next subtree to expand on top.
  std::vector<Subtree> pending_;
};

}  // namespace corrdp

#endif  // CORRDP_STREAM_H_
