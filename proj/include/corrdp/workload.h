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

#ifndef CORRDP_WORKLOAD_H_
#define CORRDP_WORKLOAD_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "corrdp/mechanism.h"
#include "corrdp/random.h"

namespace corrdp {

enum class WorkloadKind { kContinuousAll, kNodal, kRandom, kExplicit };

std::string_view WorkloadName(WorkloadKind kind);

// A family of linear counting queries over n entries. Continuous and nodal
// workloads are contiguous ranges and stay implicit; random and explicit
// workloads hold each row as a sorted list of distinct indices (the positions
// of the ones in that row of W).
class Workload {
 public:
  // All n(n+1)/2 contiguous ranges, ordered by (lo, hi).
  static Workload ContinuousAll(std::size_t n);
  // The 2n - 1 subtree ranges of the perfect tree over n = 2^depth leaves, in
  // level order.
  static Workload Nodal(int depth);
  // `count` rows; each draws a size uniformly from {n/4, ..., n} and then that
  // many distinct indices uniformly from [0, n).
  static Workload Random(std::size_t n, std::size_t count, std::uint64_t seed);
  static absl::StatusOr<Workload> Explicit(
      std::size_t n, std::vector<std::vector<std::size_t>> rows);

  WorkloadKind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  std::uint64_t row_count() const;
  bool is_range_workload() const {
    return kind_ == WorkloadKind::kContinuousAll || kind_ == WorkloadKind::kNodal;
  }

  // Row i of a range workload.
  RangeQuery RangeRow(std::uint64_t i) const;
  // Row i of an index-set workload.
  std::span<const std::size_t> IndexRow(std::uint64_t i) const {
    return rows_[i];
  }

 private:
  Workload(WorkloadKind kind, std::size_t n) : kind_(kind), n_(n) {}

  WorkloadKind kind_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> rows_;
};

// Row of the nodal workload for level-order node m of a tree with n leaves.
RangeQuery NodeRange(std::size_t m, std::size_t n);

// A contiguous range drawn uniformly from all n(n+1)/2 of them: with
// probability 2/(n+1) a uniform singleton, otherwise [min, max] of two
// distinct uniform indices.
RangeQuery SampleUniformRange(std::size_t n, SeededRng& rng);

}  // namespace corrdp

#endif  // CORRDP_WORKLOAD_H_
