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

#ifndef CORRDP_BASELINES_H_
#define CORRDP_BASELINES_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "corrdp/mechanism.h"
#include "corrdp/privacy.h"
#include "corrdp/random.h"

namespace corrdp {

enum class BaselineTag { kIidGaussian, kBinaryTree };

// Input perturbation with i.i.d. N(0, sigma^2) per entry, sigma from
// CalibrateIid. Answers go through the same prefix-sum path as the
// correlated mechanism and are therefore consistent.
absl::StatusOr<PrivatizedVector> IidPerturb(const DataVector& x,
                                            const PrivacyBudget& budget,
                                            SeededRng& rng);
// Same with an explicit noise scale.
absl::StatusOr<PrivatizedVector> IidPerturb(const DataVector& x,
                                            const CalibratedSigma& sigma,
                                            SeededRng& rng);

// Binary-tree output mechanism: every subtree sum of the perfect tree gets
// independent N(0, sigma_bt^2) noise. One data entry touches depth+1 node
// sums, so sigma_bt comes from CalibrateGeneral(depth + 1). Parents are not
// the sums of their noisy children.
class BinaryTreeRelease {
 public:
  BinaryTreeRelease(int depth, std::vector<double> noisy_nodes,
                    CalibratedSigma sigma);

  int depth() const { return depth_; }
  std::size_t size() const { return std::size_t{1} << depth_; }
  std::span<const double> noisy_nodes() const { return noisy_nodes_; }
  const CalibratedSigma& sigma() const { return sigma_; }

  // Sum of the noisy nodes in the canonical cover of q. No bounds checks.
  double Answer(const RangeQuery& q) const;

 private:
  int depth_;
  std::vector<double> noisy_nodes_;
  CalibratedSigma sigma_;
};

// x.size() must be a power of two.
absl::StatusOr<BinaryTreeRelease> BtPerturb(const DataVector& x,
                                            const PrivacyBudget& budget,
                                            SeededRng& rng);
absl::StatusOr<BinaryTreeRelease> BtPerturb(const DataVector& x,
                                            const CalibratedSigma& sigma,
                                            SeededRng& rng);

absl::StatusOr<double> AnswerRange(const BinaryTreeRelease& release,
                                   const RangeQuery& q);

}  // namespace corrdp

#endif  // CORRDP_BASELINES_H_
