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

#include "corrdp/workload.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace corrdp {

std::string_view WorkloadName(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::kContinuousAll:
      return "continuous";
    case WorkloadKind::kNodal:
      return "nodal";
    case WorkloadKind::kRandom:
      return "random";
    case WorkloadKind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

Workload Workload::ContinuousAll(std::size_t n) {
  return Workload(WorkloadKind::kContinuousAll, n);
}

Workload Workload::Nodal(int depth) {
  return Workload(WorkloadKind::kNodal, std::size_t{1} << depth);
}

Workload Workload::Random(std::size_t n, std::size_t count,
                          std::uint64_t seed) {
  Workload w(WorkloadKind::kRandom, n);
  SeededRng rng(seed);
  const std::size_t min_size = std::max<std::size_t>(1, n / 4);
  std::vector<std::size_t> pool(n);
  w.rows_.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    const std::size_t size = min_size + rng.UniformIndex(n - min_size + 1);
    // Partial Fisher-Yates over a fresh identity permutation.
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j = i + rng.UniformIndex(n - i);
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> row(pool.begin(), pool.begin() + size);
    std::sort(row.begin(), row.end());
    w.rows_.push_back(std::move(row));
  }
  return w;
}

absl::StatusOr<Workload> Workload::Explicit(
    std::size_t n, std::vector<std::vector<std::size_t>> rows) {
  if (n == 0) return absl::InvalidArgumentError("workload over zero entries");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", r, " repeats an index"));
    }
    if (!row.empty() && row.back() >= n) {
      return absl::OutOfRangeError(
          absl::StrCat("row ", r, " has index ", row.back(), " >= ", n));
    }
  }
  Workload w(WorkloadKind::kExplicit, n);
  w.rows_ = std::move(rows);
  return w;
}

std::uint64_t Workload::row_count() const {
  switch (kind_) {
    case WorkloadKind::kContinuousAll:
      return std::uint64_t{n_} * (n_ + 1) / 2;
    case WorkloadKind::kNodal:
      return 2 * std::uint64_t{n_} - 1;
    default:
      return rows_.size();
  }
}

RangeQuery NodeRange(std::size_t m, std::size_t n) {
  const int level = std::bit_width(m + 1) - 1;
  const std::size_t width = n >> level;
  const std::size_t offset = m + 1 - (std::size_t{1} << level);
  return {offset * width, offset * width + width - 1};
}

RangeQuery Workload::RangeRow(std::uint64_t i) const {
  if (kind_ == WorkloadKind::kNodal) return NodeRange(i, n_);
  // Rows with lo = l start after sum_{t<l} (n - t) earlier rows. Invert that
  // triangular count; the floating estimate is corrected by at most one step.
  const double nn = static_cast<double>(n_);
  const double disc = (2 * nn + 1) * (2 * nn + 1) - 8.0 * static_cast<double>(i);
  auto lo = static_cast<std::uint64_t>(((2 * nn + 1) - std::sqrt(disc)) / 2);
  auto start = [&](std::uint64_t l) { return l * n_ - l * (l - 1) / 2; };
  while (lo > 0 && start(lo) > i) --lo;
  while (start(lo + 1) <= i) ++lo;
  return {static_cast<std::size_t>(lo),
          static_cast<std::size_t>(lo + (i - start(lo)))};
}

RangeQuery SampleUniformRange(std::size_t n, SeededRng& rng) {
  if (rng.Uniform() < 2.0 / static_cast<double>(n + 1)) {
    const std::size_t i = rng.UniformIndex(n);
    return {i, i};
  }
  const std::size_t a = rng.UniformIndex(n);
  std::size_t b = rng.UniformIndex(n - 1);
  if (b >= a) ++b;
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace corrdp
