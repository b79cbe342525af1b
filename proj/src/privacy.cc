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

#include "corrdp/privacy.h"

#include <bit>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "corrdp/correlation.h"

namespace corrdp {

absl::StatusOr<PrivacyBudget> PrivacyBudget::Create(double epsilon,
                                                    double delta) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must lie in (0, 1], got ", epsilon));
  }
  if (!(delta > 0.0 && delta <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1/2], got ", delta));
  }
  return PrivacyBudget(epsilon, delta);
}

std::string_view SigmaSourceName(SigmaSource source) {
  switch (source) {
    case SigmaSource::kGeneral:
      return "general";
    case SigmaSource::kTree:
      return "tree";
    case SigmaSource::kIid:
      return "iid";
  }
  return "unknown";
}

absl::StatusOr<CalibratedSigma> CalibrateGeneral(double diag_max,
                                                 const PrivacyBudget& budget) {
  if (!std::isfinite(diag_max) || diag_max <= 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("precision diagonal maximum must be positive, got ",
                     diag_max));
  }
  const double eps = budget.epsilon();
  const double sigma_squared =
      2.0 * diag_max * std::log(2.0 / budget.delta()) / (eps * eps);
  return CalibratedSigma{std::sqrt(sigma_squared), sigma_squared,
                         SigmaSource::kGeneral};
}

absl::StatusOr<CalibratedSigma> CalibrateTree(std::uint64_t n,
                                              const PrivacyBudget& budget) {
  if (n < 2 || !std::has_single_bit(n)) {
    return absl::InvalidArgumentError(
        absl::StrCat("n must be a power of two >= 2, got ", n));
  }
  const int depth = std::countr_zero(n);
  absl::StatusOr<CalibratedSigma> out =
      CalibrateGeneral(PrecisionDiagMax(depth), budget);
  if (out.ok()) out->source = SigmaSource::kTree;
  return out;
}

absl::StatusOr<CalibratedSigma> CalibrateIid(const PrivacyBudget& budget) {
  absl::StatusOr<CalibratedSigma> out = CalibrateGeneral(1.0, budget);
  if (out.ok()) out->source = SigmaSource::kIid;
  return out;
}

}  // namespace corrdp
