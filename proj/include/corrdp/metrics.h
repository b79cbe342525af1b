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

#ifndef CORRDP_METRICS_H_
#define CORRDP_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "corrdp/correlation.h"
#include "corrdp/mechanism.h"
#include "corrdp/privacy.h"
#include "corrdp/workload.h"

namespace corrdp {

// The three error metrics of a privatized workload answer W M(x) - W x:
//   err_l2             E ||W s||_2^2                 (expected total squared)
//   err_worst_expected max_rows E |w s|             (worst-case expected)
//   err_expected_worst E max_rows |w s|             (expected worst-case)
// plus Monte Carlo standard errors when estimated by simulation.
struct ErrorReport {
  MechanismKind mechanism = MechanismKind::kCorrelated;
  WorkloadKind workload = WorkloadKind::kContinuousAll;
  std::size_t n = 0;
  double sigma = 0.0;

  double err_l2 = 0.0;
  double err_worst_expected = 0.0;
  double err_expected_worst = 0.0;
  double se_l2 = 0.0;
  double se_worst_expected = 0.0;
  double se_expected_worst = 0.0;

  std::size_t replicates = 0;
  std::size_t queries_sampled = 0;
  // Rows in the full workload (m).
  std::uint64_t total_queries = 0;
};

// sigma^2 * sum_rows w C_k w^T from the dense C_k; workload.n() must be 2^k.
absl::StatusOr<double> ExactErrL2(const Workload& workload, int depth,
                                  double sigma,
                                  int dense_cap = kDefaultDenseCap);

// sqrt(2/pi) * sigma * max_rows sqrt(w C_k w^T), using E|Z| = sqrt(2/pi) for a
// standard normal Z.
absl::StatusOr<double> ExactErrWorstExpected(const Workload& workload,
                                             int depth, double sigma,
                                             int dense_cap = kDefaultDenseCap);

struct MonteCarloOptions {
  MechanismKind mechanism = MechanismKind::kCorrelated;
  std::size_t replicates = 10;
  std::size_t queries_per_replicate = 5000;
  // Evaluate every row instead of a sample. Continuous workloads allow this
  // only up to n = 64.
  bool exhaustive = false;
  std::uint64_t seed = 0;
  // 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Overrides the calibrated sigma when positive (the sigma -> 0 limit and
  // fixed-sigma studies); budget is then ignored for the noise scale.
  double sigma_override = 0.0;
};

// Monte Carlo error estimate. One query set is drawn from the workload (all
// rows when exhaustive, or when the workload has no more rows than requested)
// and reused by every replicate. Each replicate perturbs fresh synthetic data
// (uniform integers 1..1000) under its own derived seed and records the
// errors of those queries. Estimators:
//   err_l2             m * mean_q e_q^2, averaged over replicates
//   err_worst_expected mean |e_q*| where q* maximizes the mean |e_q| over the
//                      other parity of replicates (even replicates are scored
//                      on the odd half's worst query and vice versa)
//   err_expected_worst replicate mean of max_q |e_q|
// The cross-fitting avoids the upward bias of reporting the largest of many
// noisy means. With a sampled query set the last estimator is biased low
// relative to the full workload. Replicates are regenerated from their seeds
// for the second pass, so the cost is twice that of one pass. Results do not
// depend on the thread count.
absl::StatusOr<ErrorReport> MonteCarloErrors(const Workload& workload,
                                             const PrivacyBudget& budget,
                                             const MonteCarloOptions& options);

struct LevelVariance {
  int level;  // 0 = root, depth = leaves
  double mean_variance;
  double std_error;
};

// Empirical error variance of the nodal (subtree) queries, averaged over the
// nodes of each level. The per-replicate level average is the sample unit, so
// std_error accounts for correlation between nodes.
absl::StatusOr<std::vector<LevelVariance>> VarianceByLevel(
    MechanismKind mechanism, int depth, const PrivacyBudget& budget,
    std::size_t replicates, std::uint64_t seed, unsigned threads = 0);

// Noise scale each mechanism uses for n = 2^depth leaves.
absl::StatusOr<CalibratedSigma> MechanismSigma(MechanismKind mechanism,
                                               int depth,
                                               const PrivacyBudget& budget);

}  // namespace corrdp

#endif  // CORRDP_METRICS_H_
