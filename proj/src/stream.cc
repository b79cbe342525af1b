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

#include "corrdp/stream.h"

#include "corrdp/kernels.h"
#include "corrdp/sampler.h"

namespace corrdp {

absl::StatusOr<StreamSampler> StreamSampler::Create(double sigma) {
  if (absl::Status s = ValidateSigma(sigma); !s.ok()) return s;
  return StreamSampler(sigma);
}

void StreamSampler::Grow(SeededRng& rng) {
  const double left = root_;
  const double y = sigma_ * rng.StandardNormal();
  const double right = -0.5 * left + kernels::kSplitWeight * y;
  root_ = left + right;
  pending_.push_back({right, depth_});
  capacity_ *= 2;
  ++depth_;
}

double StreamSampler::Next(SeededRng& rng) {
  if (capacity_ == 0) {
    root_ = sigma_ * rng.StandardNormal();
    capacity_ = 1;
    count_ = 1;
    return root_;
  }
  if (count_ == capacity_) Grow(rng);
  Subtree node = pending_.back();
  pending_.pop_back();
  while (node.height > 0) {
    const auto [left, right] =
        SplitNode(node.value, sigma_ * rng.StandardNormal());
    --node.height;
    pending_.push_back({right, node.height});
    node.value = left;
  }
  ++count_;
  return node.value;
}

}  // namespace corrdp
