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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <variant>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "corrdp/baselines.h"
#include "corrdp/sampler.h"

namespace corrdp {
namespace {

// sqrt(2/pi) = E|Z| for Z ~ N(0, 1).
const double kHalfNormalMean = std::sqrt(2.0 / std::numbers::pi);

// Replicates handed to a worker at a time. Accumulation happens per block and
// blocks are merged in index order, which keeps results independent of the
// number of threads.
constexpr std::size_t kBlock = 4;

// Quadratic form w C w^T for every row, from the dense C_k.
absl::StatusOr<std::vector<double>> RowVariances(const Workload& workload,
                                                 int depth, int dense_cap) {
  if (workload.n() != (std::size_t{1} << depth)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "workload over ", workload.n(), " entries but depth ", depth));
  }
  absl::StatusOr<DenseMatrix> c = BuildCorrelation(depth, dense_cap);
  if (!c.ok()) return c.status();
  std::vector<double> out;
  out.reserve(workload.row_count());
  if (workload.is_range_workload()) {
    const RangeVarianceTable table(*c);
    for (std::uint64_t i = 0; i < workload.row_count(); ++i) {
      const RangeQuery q = workload.RangeRow(i);
      out.push_back(table.RangeSum(q.lo, q.hi));
    }
    return out;
  }
  for (std::uint64_t i = 0; i < workload.row_count(); ++i) {
    const auto row = workload.IndexRow(i);
    double v = 0.0;
    for (std::size_t a : row) {
      const auto c_row = c->row(a);
      for (std::size_t b : row) v += c_row[b];
    }
    out.push_back(v);
  }
  return out;
}

unsigned ResolveThreads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(block_index) for every block on a small pool of threads.
template <typename Body>
void ForEachBlock(std::size_t blocks, unsigned threads, Body body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) body(b);
  };
  const unsigned count =
      static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
  if (count <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
}

using Release = std::variant<PrivatizedVector, BinaryTreeRelease>;

absl::StatusOr<Release> MakeRelease(MechanismKind mechanism,
                                    const DataVector& x,
                                    const CalibratedSigma& sigma,
                                    SeededRng& rng) {
  switch (mechanism) {
    case MechanismKind::kCorrelated: {
      absl::StatusOr<PrivatizedVector> p = Perturb(x, sigma, rng);
      if (!p.ok()) return p.status();
      return Release(std::move(*p));
    }
    case MechanismKind::kIid: {
      absl::StatusOr<PrivatizedVector> p = IidPerturb(x, sigma, rng);
      if (!p.ok()) return p.status();
      return Release(std::move(*p));
    }
    case MechanismKind::kBinaryTree: {
      absl::StatusOr<BinaryTreeRelease> p = BtPerturb(x, sigma, rng);
      if (!p.ok()) return p.status();
      return Release(std::move(*p));
    }
  }
  return absl::InternalError("unhandled mechanism");
}

double AnswerRelease(const Release& release, const RangeQuery& q) {
  return std::visit([&](const auto& r) { return r.Answer(q); }, release);
}

// Calls fn(run) for each maximal run of consecutive indices in a sorted row.
template <typename Fn>
void ForEachRun(std::span<const std::size_t> row, Fn fn) {
  std::size_t i = 0;
  while (i < row.size()) {
    std::size_t j = i;
    while (j + 1 < row.size() && row[j + 1] == row[j] + 1) ++j;
    fn(RangeQuery{row[i], row[j]});
    i = j + 1;
  }
}

// Query set evaluated by every replicate: either ranges or row indices.
struct QuerySet {
  std::vector<RangeQuery> ranges;
  std::vector<std::uint64_t> rows;
  std::size_t size() const { return ranges.size() + rows.size(); }
};

absl::StatusOr<QuerySet> ChooseQueries(const Workload& workload,
                                       const MonteCarloOptions& options) {
  QuerySet set;
  const std::uint64_t m = workload.row_count();
  const bool all = options.exhaustive || m <= options.queries_per_replicate;
  if (options.exhaustive && workload.kind() == WorkloadKind::kContinuousAll &&
      workload.n() > 64) {
    return absl::InvalidArgumentError(
        "exhaustive continuous workload is limited to n <= 64");
  }
  if (!all && options.queries_per_replicate == 0) {
    return absl::InvalidArgumentError("queries_per_replicate must be positive");
  }
  // The query stream sits past every replicate index.
  SeededRng rng(DeriveSeed(options.seed, ~std::uint64_t{0}));
  if (workload.is_range_workload()) {
    if (all) {
      for (std::uint64_t i = 0; i < m; ++i) {
        set.ranges.push_back(workload.RangeRow(i));
      }
    } else if (workload.kind() == WorkloadKind::kContinuousAll) {
      for (std::size_t i = 0; i < options.queries_per_replicate; ++i) {
        set.ranges.push_back(SampleUniformRange(workload.n(), rng));
      }
    } else {
      for (std::size_t i = 0; i < options.queries_per_replicate; ++i) {
        set.ranges.push_back(workload.RangeRow(rng.UniformIndex(m)));
      }
    }
  } else {
    if (all) {
      for (std::uint64_t i = 0; i < m; ++i) set.rows.push_back(i);
    } else {
      for (std::size_t i = 0; i < options.queries_per_replicate; ++i) {
        set.rows.push_back(rng.UniformIndex(m));
      }
    }
  }
  return set;
}

struct MeanAndError {
  double mean;
  double std_error;
};

MeanAndError Summarize(std::span<const double> xs) {
  const double count = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / count;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(ss / (count - 1)) : 0.0;
  return {mean, sd / std::sqrt(count)};
}

}  // namespace

absl::StatusOr<double> ExactErrL2(const Workload& workload, int depth,
                                  double sigma, int dense_cap) {
  absl::StatusOr<std::vector<double>> vars =
      RowVariances(workload, depth, dense_cap);
  if (!vars.ok()) return vars.status();
  double total = 0.0;
  for (double v : *vars) total += v;
  return sigma * sigma * total;
}

absl::StatusOr<double> ExactErrWorstExpected(const Workload& workload,
                                             int depth, double sigma,
                                             int dense_cap) {
  absl::StatusOr<std::vector<double>> vars =
      RowVariances(workload, depth, dense_cap);
  if (!vars.ok()) return vars.status();
  if (vars->empty()) return absl::InvalidArgumentError("empty workload");
  const double worst = *std::max_element(vars->begin(), vars->end());
  return kHalfNormalMean * sigma * std::sqrt(worst);
}

absl::StatusOr<CalibratedSigma> MechanismSigma(MechanismKind mechanism,
                                               int depth,
                                               const PrivacyBudget& budget) {
  switch (mechanism) {
    case MechanismKind::kCorrelated: {
      absl::StatusOr<CalibratedSigma> s =
          CalibrateGeneral(PrecisionDiagMax(depth), budget);
      if (s.ok()) s->source = SigmaSource::kTree;
      return s;
    }
    case MechanismKind::kIid:
      return CalibrateIid(budget);
    case MechanismKind::kBinaryTree:
      return CalibrateGeneral(depth + 1, budget);
  }
  return absl::InternalError("unhandled mechanism");
}

absl::StatusOr<ErrorReport> MonteCarloErrors(const Workload& workload,
                                             const PrivacyBudget& budget,
                                             const MonteCarloOptions& options) {
  if (options.replicates < 2) {
    return absl::InvalidArgumentError("need at least 2 replicates");
  }
  const std::size_t n = workload.n();
  const int depth = CeilLog2(n);
  if (options.mechanism == MechanismKind::kBinaryTree &&
      n != (std::size_t{1} << depth)) {
    return absl::InvalidArgumentError(
        "binary tree mechanism needs a power-of-two length");
  }
  CalibratedSigma sigma{};
  if (options.sigma_override > 0.0) {
    sigma = {options.sigma_override,
             options.sigma_override * options.sigma_override,
             SigmaSource::kGeneral};
  } else {
    absl::StatusOr<CalibratedSigma> s =
        MechanismSigma(options.mechanism, depth, budget);
    if (!s.ok()) return s.status();
    sigma = *s;
  }
  absl::StatusOr<QuerySet> queries = ChooseQueries(workload, options);
  if (!queries.ok()) return queries.status();
  const std::size_t q_count = queries->size();

  const std::size_t reps = options.replicates;
  const std::size_t blocks = (reps + kBlock - 1) / kBlock;
  std::vector<double> rep_sumsq(reps);
  std::vector<double> rep_maxabs(reps);
  // Per query sums of |e| over even and over odd replicates. kBlock is even,
  // so every block sees replicates of both parities in the same pattern.
  struct BlockSums {
    std::vector<double> even;
    std::vector<double> odd;
  };
  std::vector<BlockSums> block_sums(blocks);
  std::vector<absl::Status> block_status(blocks);
  const unsigned threads = ResolveThreads(options.threads);

  // Signed errors of every selected query under replicate r. Replicates are
  // pure functions of (seed, r), so a second pass can regenerate them.
  auto replicate_errors = [&](std::size_t r, std::vector<double>& truth_prefix,
                              std::vector<double>& errs) -> absl::Status {
    SeededRng rng(DeriveSeed(options.seed, r));
    const DataVector x = DataVector::SyntheticUniform(n, rng);
    absl::StatusOr<Release> release =
        MakeRelease(options.mechanism, x, sigma, rng);
    if (!release.ok()) return release.status();
    for (std::size_t i = 0; i < n; ++i) {
      truth_prefix[i + 1] = truth_prefix[i] + x.values()[i];
    }
    errs.resize(q_count);
    for (std::size_t q = 0; q < queries->ranges.size(); ++q) {
      const RangeQuery& rq = queries->ranges[q];
      const double truth = truth_prefix[rq.hi + 1] - truth_prefix[rq.lo];
      errs[q] = AnswerRelease(*release, rq) - truth;
    }
    for (std::size_t q = 0; q < queries->rows.size(); ++q) {
      double err = 0.0;
      ForEachRun(workload.IndexRow(queries->rows[q]), [&](RangeQuery run) {
        err += AnswerRelease(*release, run) -
               (truth_prefix[run.hi + 1] - truth_prefix[run.lo]);
      });
      errs[queries->ranges.size() + q] = err;
    }
    return absl::OkStatus();
  };

  ForEachBlock(blocks, threads, [&](std::size_t b) {
    BlockSums& acc = block_sums[b];
    acc.even.assign(q_count, 0.0);
    acc.odd.assign(q_count, 0.0);
    std::vector<double> truth_prefix(n + 1);
    std::vector<double> errs;
    const std::size_t end = std::min(reps, (b + 1) * kBlock);
    for (std::size_t r = b * kBlock; r < end; ++r) {
      if (absl::Status s = replicate_errors(r, truth_prefix, errs); !s.ok()) {
        block_status[b] = s;
        return;
      }
      std::vector<double>& half = (r % 2 == 0) ? acc.even : acc.odd;
      double sumsq = 0.0;
      double maxabs = 0.0;
      for (std::size_t q = 0; q < q_count; ++q) {
        const double a = std::abs(errs[q]);
        sumsq += errs[q] * errs[q];
        maxabs = std::max(maxabs, a);
        half[q] += a;
      }
      rep_sumsq[r] = sumsq;
      rep_maxabs[r] = maxabs;
    }
  });
  for (const absl::Status& s : block_status) {
    if (!s.ok()) return s;
  }

  std::vector<double> even(q_count, 0.0);
  std::vector<double> odd(q_count, 0.0);
  for (const BlockSums& acc : block_sums) {
    for (std::size_t q = 0; q < q_count; ++q) {
      even[q] += acc.even[q];
      odd[q] += acc.odd[q];
    }
  }
  const std::size_t worst_even = static_cast<std::size_t>(
      std::max_element(even.begin(), even.end()) - even.begin());
  const std::size_t worst_odd = static_cast<std::size_t>(
      std::max_element(odd.begin(), odd.end()) - odd.begin());

  // Cross-fitted worst-case expected error: each replicate is scored on the
  // query that the other half of the replicates found worst. Taking the max
  // of the same means that are reported would bias the estimate upward by
  // roughly sqrt(2 ln q_count) standard errors.
  std::vector<double> rep_worst(reps);
  std::vector<absl::Status> pass_status(blocks);
  ForEachBlock(blocks, threads, [&](std::size_t b) {
    std::vector<double> truth_prefix(n + 1);
    std::vector<double> errs;
    const std::size_t end = std::min(reps, (b + 1) * kBlock);
    for (std::size_t r = b * kBlock; r < end; ++r) {
      if (absl::Status s = replicate_errors(r, truth_prefix, errs); !s.ok()) {
        pass_status[b] = s;
        return;
      }
      rep_worst[r] = std::abs(errs[r % 2 == 0 ? worst_odd : worst_even]);
    }
  });
  for (const absl::Status& s : pass_status) {
    if (!s.ok()) return s;
  }

  const double m = static_cast<double>(workload.row_count());
  std::vector<double> l2_per_rep(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    l2_per_rep[r] = m * rep_sumsq[r] / static_cast<double>(q_count);
  }
  const MeanAndError l2 = Summarize(l2_per_rep);
  const MeanAndError ew = Summarize(rep_maxabs);
  const MeanAndError we = Summarize(rep_worst);

  ErrorReport report;
  report.mechanism = options.mechanism;
  report.workload = workload.kind();
  report.n = n;
  report.sigma = sigma.sigma;
  report.err_l2 = l2.mean;
  report.se_l2 = l2.std_error;
  report.err_worst_expected = we.mean;
  report.se_worst_expected = we.std_error;
  report.err_expected_worst = ew.mean;
  report.se_expected_worst = ew.std_error;
  report.replicates = reps;
  report.queries_sampled = q_count;
  report.total_queries = workload.row_count();
  return report;
}

absl::StatusOr<std::vector<LevelVariance>> VarianceByLevel(
    MechanismKind mechanism, int depth, const PrivacyBudget& budget,
    std::size_t replicates, std::uint64_t seed, unsigned threads) {
  if (replicates < 2) {
    return absl::InvalidArgumentError("need at least 2 replicates");
  }
  if (depth < 0 || depth > kMaxSampleDepth) {
    return absl::OutOfRangeError(absl::StrCat("bad depth ", depth));
  }
  absl::StatusOr<CalibratedSigma> sigma =
      MechanismSigma(mechanism, depth, budget);
  if (!sigma.ok()) return sigma.status();
  const std::size_t n = std::size_t{1} << depth;
  const std::size_t levels = static_cast<std::size_t>(depth) + 1;
  // level_means[r * levels + l]: mean squared error over level-l nodes.
  std::vector<double> level_means(replicates * levels, 0.0);
  const std::size_t blocks = (replicates + kBlock - 1) / kBlock;
  std::vector<absl::Status> block_status(blocks);

  ForEachBlock(blocks, ResolveThreads(threads), [&](std::size_t b) {
    std::vector<double> truth_prefix(n + 1);
    const std::size_t end = std::min(replicates, (b + 1) * kBlock);
    for (std::size_t r = b * kBlock; r < end; ++r) {
      SeededRng rng(DeriveSeed(seed, r));
      const DataVector x = DataVector::SyntheticUniform(n, rng);
      absl::StatusOr<Release> release = MakeRelease(mechanism, x, *sigma, rng);
      if (!release.ok()) {
        block_status[b] = release.status();
        return;
      }
      for (std::size_t i = 0; i < n; ++i) {
        truth_prefix[i + 1] = truth_prefix[i] + x.values()[i];
      }
      for (std::size_t l = 0; l < levels; ++l) {
        const std::size_t width = std::size_t{1} << l;
        double sumsq = 0.0;
        for (std::size_t m = width - 1; m < 2 * width - 1; ++m) {
          const RangeQuery q = NodeRange(m, n);
          const double err = AnswerRelease(*release, q) -
                             (truth_prefix[q.hi + 1] - truth_prefix[q.lo]);
          sumsq += err * err;
        }
        level_means[r * levels + l] = sumsq / static_cast<double>(width);
      }
    }
  });
  for (const absl::Status& s : block_status) {
    if (!s.ok()) return s;
  }

  std::vector<LevelVariance> out;
  std::vector<double> column(replicates);
  for (std::size_t l = 0; l < levels; ++l) {
    for (std::size_t r = 0; r < replicates; ++r) {
      column[r] = level_means[r * levels + l];
    }
    const MeanAndError s = Summarize(column);
    out.push_back({static_cast<int>(l), s.mean, s.std_error});
  }
  return out;
}

}  // namespace corrdp
