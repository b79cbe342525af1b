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

#include "corrdp/metrics.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

namespace corrdp {
namespace {

const double kHalfNormal = std::sqrt(2.0 / std::numbers::pi);

PrivacyBudget Budget() { return *PrivacyBudget::Create(0.1, 1e-9); }

TEST(MetricsTest, NodalExact) {
  for (int k = 1; k <= 10; ++k) {
    const double n = std::ldexp(1.0, k);
    const Workload w = Workload::Nodal(k);
    const double sigma = 3.5;
    const double l2 = *ExactErrL2(w, k, sigma);
    const double we = *ExactErrWorstExpected(w, k, sigma);
    EXPECT_NEAR(l2 / ((2 * n - 1) * sigma * sigma), 1.0, 1e-12) << k;
    EXPECT_NEAR(we / (kHalfNormal * sigma), 1.0, 1e-12) << k;
    // The root-mean-square side exceeds the worst expected error here, which
    // is why the chain is checked in its sqrt(2/pi)-scaled form below.
    EXPECT_GT(std::sqrt(l2 / (2 * n - 1)), we);
  }
}

TEST(MetricsTest, IdentityAndContinuousExact) {
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t i = 0; i < 8; ++i) rows.push_back({i});
  const Workload id = *Workload::Explicit(8, rows);
  EXPECT_NEAR(*ExactErrL2(id, 3, 2.0), 8 * 4.0, 1e-12);
  EXPECT_NEAR(*ExactErrWorstExpected(id, 3, 2.0), kHalfNormal * 2.0, 1e-12);

  // Whole range plus a singleton at k = 1: variances 1 and 1 and 1.
  const Workload c = Workload::ContinuousAll(2);
  EXPECT_NEAR(*ExactErrL2(c, 1, 1.0), 3.0, 1e-12);
  // k = 3 worst range variance is 2.4375.
  EXPECT_NEAR(*ExactErrWorstExpected(Workload::ContinuousAll(8), 3, 1.0),
              kHalfNormal * std::sqrt(2.4375), 1e-12);
  EXPECT_FALSE(ExactErrL2(Workload::ContinuousAll(8), 2, 1.0).ok());
}

TEST(MetricsTest, MonteCarloAgreesWithExactNodal) {
  for (MechanismKind mech : {MechanismKind::kCorrelated, MechanismKind::kIid,
                             MechanismKind::kBinaryTree}) {
    MonteCarloOptions opt;
    opt.mechanism = mech;
    opt.replicates = 4000;
    opt.seed = 17;
    opt.sigma_override = 2.0;
    const Workload w = Workload::Nodal(4);
    absl::StatusOr<ErrorReport> r = MonteCarloErrors(w, Budget(), opt);
    ASSERT_TRUE(r.ok()) << r.status();
    EXPECT_EQ(r->total_queries, 31u);
    EXPECT_EQ(r->queries_sampled, 31u);
    double want = 0.0;
    if (mech == MechanismKind::kCorrelated || mech == MechanismKind::kBinaryTree) {
      want = 31 * 4.0;
    } else {
      // Node of width w has variance w sigma^2: 5 levels of total 16 each.
      want = 5 * 16 * 4.0;
    }
    EXPECT_NEAR(r->err_l2, want, 5 * r->se_l2) << MechanismName(mech);
  }
}

TEST(MetricsTest, ThreadCountDoesNotChangeResults) {
  MonteCarloOptions opt;
  opt.replicates = 37;
  opt.queries_per_replicate = 300;
  opt.seed = 5;
  const Workload w = Workload::ContinuousAll(100);
  opt.threads = 1;
  const ErrorReport a = *MonteCarloErrors(w, Budget(), opt);
  opt.threads = 5;
  const ErrorReport b = *MonteCarloErrors(w, Budget(), opt);
  EXPECT_EQ(a.err_l2, b.err_l2);
  EXPECT_EQ(a.err_worst_expected, b.err_worst_expected);
  EXPECT_EQ(a.err_expected_worst, b.err_expected_worst);
  EXPECT_EQ(a.se_l2, b.se_l2);
  EXPECT_EQ(a.queries_sampled, 300u);
  EXPECT_EQ(a.total_queries, 5050u);
}

TEST(MetricsTest, ErrorOrderingChain) {
  for (MechanismKind mech : {MechanismKind::kCorrelated, MechanismKind::kIid,
                             MechanismKind::kBinaryTree}) {
    for (const Workload& w :
         {Workload::ContinuousAll(64), Workload::Nodal(6),
          Workload::Random(64, 200, 4)}) {
      MonteCarloOptions opt;
      opt.mechanism = mech;
      opt.replicates = 400;
      opt.seed = 23;
      const ErrorReport r = *MonteCarloErrors(w, Budget(), opt);
      const double m = static_cast<double>(r.total_queries);
      EXPECT_LE(kHalfNormal * std::sqrt(r.err_l2 / m),
                r.err_worst_expected + 3 * r.se_worst_expected)
          << MechanismName(mech) << " " << WorkloadName(w.kind());
      EXPECT_LE(r.err_worst_expected,
                r.err_expected_worst + 3 * r.se_expected_worst);
    }
  }
}

TEST(MetricsTest, VanishingNoise) {
  MonteCarloOptions opt;
  opt.replicates = 8;
  opt.sigma_override = 1e-12;
  const ErrorReport r =
      *MonteCarloErrors(Workload::ContinuousAll(32), Budget(), opt);
  EXPECT_LT(r.err_l2, 1e-18);
  EXPECT_LT(r.err_expected_worst, 1e-9);
}

TEST(MetricsTest, OptionValidation) {
  MonteCarloOptions opt;
  opt.replicates = 1;
  EXPECT_FALSE(MonteCarloErrors(Workload::Nodal(3), Budget(), opt).ok());
  opt.replicates = 4;
  opt.exhaustive = true;
  EXPECT_FALSE(
      MonteCarloErrors(Workload::ContinuousAll(128), Budget(), opt).ok());
  EXPECT_TRUE(MonteCarloErrors(Workload::ContinuousAll(64), Budget(), opt).ok());
  opt.exhaustive = false;
  opt.mechanism = MechanismKind::kBinaryTree;
  EXPECT_FALSE(MonteCarloErrors(Workload::ContinuousAll(12), Budget(), opt).ok());
}

TEST(MetricsTest, ExhaustiveMatchesExactContinuous) {
  MonteCarloOptions opt;
  opt.replicates = 3000;
  opt.exhaustive = true;
  opt.sigma_override = 1.0;
  opt.seed = 8;
  const Workload w = Workload::ContinuousAll(16);
  const ErrorReport r = *MonteCarloErrors(w, Budget(), opt);
  EXPECT_EQ(r.queries_sampled, 136u);
  EXPECT_NEAR(r.err_l2, *ExactErrL2(w, 4, 1.0), 5 * r.se_l2);
}

TEST(MetricsTest, LevelProfiles) {
  const int k = 5;
  for (MechanismKind mech : {MechanismKind::kCorrelated, MechanismKind::kIid,
                             MechanismKind::kBinaryTree}) {
    absl::StatusOr<std::vector<LevelVariance>> levels =
        VarianceByLevel(mech, k, Budget(), 4000, 3);
    ASSERT_TRUE(levels.ok());
    ASSERT_EQ(levels->size(), 6u);
    const double s2 = MechanismSigma(mech, k, Budget())->sigma_squared;
    for (const LevelVariance& lv : *levels) {
      const double want =
          mech == MechanismKind::kIid ? s2 * std::ldexp(1.0, k - lv.level) : s2;
      EXPECT_NEAR(lv.mean_variance, want, 5 * lv.std_error)
          << MechanismName(mech) << " level " << lv.level;
    }
  }
}


TEST(MetricsTest, WorstExpectedAgreesWithExact) {
  for (int k : {3, 6}) {
    for (const Workload& w : {Workload::ContinuousAll(std::size_t{1} << k),
                              Workload::Nodal(k)}) {
      MonteCarloOptions opt;
      opt.replicates = 3000;
      opt.exhaustive = true;
      opt.sigma_override = 1.0;
      opt.seed = 40 + k;
      const ErrorReport r = *MonteCarloErrors(w, Budget(), opt);
      const double exact = *ExactErrWorstExpected(w, k, 1.0);
      EXPECT_NEAR(r.err_worst_expected, exact, 3 * r.se_worst_expected)
          << WorkloadName(w.kind()) << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace corrdp
