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

#ifndef CORRDP_PRIVACY_H_
#define CORRDP_PRIVACY_H_

#include <cstdint>
#include <string_view>

#include "absl/status/statusor.h"

namespace corrdp {

// (epsilon, delta) with epsilon in (0, 1] and delta in (0, 1/2], the range on
// which the Gaussian calibration below is valid. Construct through Create.
class PrivacyBudget {
 public:
  static absl::StatusOr<PrivacyBudget> Create(double epsilon, double delta);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }

 private:
  PrivacyBudget(double epsilon, double delta)
      : epsilon_(epsilon), delta_(delta) {}

  double epsilon_;
  double delta_;
};

enum class SigmaSource { kGeneral, kTree, kIid };

std::string_view SigmaSourceName(SigmaSource source);

struct CalibratedSigma {
  double sigma;
  double sigma_squared;
  SigmaSource source;
};

// Smallest admissible noise scale for x + N(0, sigma^2 C) with an arbitrary
// covariance C:
//   sigma^2 = 2 * max_i (C^{-1})_ii * ln(2 / delta) / epsilon^2.
// The logarithm is natural.
absl::StatusOr<CalibratedSigma> CalibrateGeneral(double diag_max,
                                                 const PrivacyBudget& budget);

// sigma^2 = (2 / eps^2 + 2 log2(n) / (3 eps^2)) * ln(2 / delta) for the tree
// covariance C_k with n = 2^k leaves, i.e. CalibrateGeneral(1 + k/3).
absl::StatusOr<CalibratedSigma> CalibrateTree(std::uint64_t n,
                                              const PrivacyBudget& budget);

// Independent noise (C = I): sigma^2 = 2 ln(2 / delta) / epsilon^2.
absl::StatusOr<CalibratedSigma> CalibrateIid(const PrivacyBudget& budget);

}  // namespace corrdp

#endif  // CORRDP_PRIVACY_H_
