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

#include "corrdp/baselines.h"

#include <algorithm>
#include <bit>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "corrdp/kernels.h"
#include "corrdp/sampler.h"

namespace corrdp {

absl::StatusOr<PrivatizedVector> IidPerturb(const DataVector& x,
                                            const PrivacyBudget& budget,
                                            SeededRng& rng) {
  absl::StatusOr<CalibratedSigma> sigma = CalibrateIid(budget);
  if (!sigma.ok()) return sigma.status();
  return IidPerturb(x, *sigma, rng);
}

absl::StatusOr<PrivatizedVector> IidPerturb(const DataVector& x,
                                            const CalibratedSigma& sigma,
                                            SeededRng& rng) {
  if (absl::Status s = ValidateSigma(sigma.sigma); !s.ok()) return s;
  std::vector<double> noise(x.size());
  rng.FillNormal(noise, sigma.sigma);
  std::vector<double> out(x.size());
  kernels::ActiveKernels().add(x.values().data(), noise.data(), out.data(),
                               x.size());
  return PrivatizedVector(
      std::move(out),
      NoiseMeta{MechanismKind::kIid, sigma.sigma, rng.seed(),
                CeilLog2(x.size()), x.size(), "identity"});
}

BinaryTreeRelease::BinaryTreeRelease(int depth, std::vector<double> noisy_nodes,
                                     CalibratedSigma sigma)
    : depth_(depth), noisy_nodes_(std::move(noisy_nodes)), sigma_(sigma) {}

double BinaryTreeRelease::Answer(const RangeQuery& q) const {
  // Same walk as RangeDecompose, summing instead of collecting.
  double total = 0.0;
  std::size_t lo = q.lo;
  std::size_t hi = q.hi + 1;
  std::size_t width = size();
  while (lo < hi) {
    const std::size_t base = width - 1;
    if (lo & 1) total += noisy_nodes_[base + lo++];
    if (hi & 1) total += noisy_nodes_[base + --hi];
    lo >>= 1;
    hi >>= 1;
    width >>= 1;
  }
  return total;
}

absl::StatusOr<BinaryTreeRelease> BtPerturb(const DataVector& x,
                                            const PrivacyBudget& budget,
                                            SeededRng& rng) {
  if (!std::has_single_bit(x.size())) {
    return absl::InvalidArgumentError(absl::StrCat(
        "binary tree mechanism needs a power-of-two length, got ", x.size()));
  }
  const int depth = std::countr_zero(x.size());
  absl::StatusOr<CalibratedSigma> sigma = CalibrateGeneral(depth + 1, budget);
  if (!sigma.ok()) return sigma.status();
  return BtPerturb(x, *sigma, rng);
}

absl::StatusOr<BinaryTreeRelease> BtPerturb(const DataVector& x,
                                            const CalibratedSigma& sigma,
                                            SeededRng& rng) {
  if (!std::has_single_bit(x.size())) {
    return absl::InvalidArgumentError(absl::StrCat(
        "binary tree mechanism needs a power-of-two length, got ", x.size()));
  }
  if (absl::Status s = ValidateSigma(sigma.sigma); !s.ok()) return s;
  const int depth = std::countr_zero(x.size());
  const std::size_t n = x.size();
  std::vector<double> sums(2 * n - 1);
  std::copy(x.values().begin(), x.values().end(), sums.begin() + (n - 1));
  for (std::size_t m = n - 1; m-- > 0;) sums[m] = sums[2 * m + 1] + sums[2 * m + 2];

  std::vector<double> noise(sums.size());
  rng.FillNormal(noise, sigma.sigma);
  kernels::ActiveKernels().add(sums.data(), noise.data(), sums.data(),
                               sums.size());
  return BinaryTreeRelease(depth, std::move(sums), sigma);
}

absl::StatusOr<double> AnswerRange(const BinaryTreeRelease& release,
                                   const RangeQuery& q) {
  if (absl::Status s = ValidateRange(q, release.size()); !s.ok()) return s;
  return release.Answer(q);
}

}  // namespace corrdp
