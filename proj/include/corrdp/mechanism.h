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

#ifndef CORRDP_MECHANISM_H_
#define CORRDP_MECHANISM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "corrdp/general_tree.h"
#include "corrdp/privacy.h"
#include "corrdp/random.h"

namespace corrdp {

enum class MechanismKind { kCorrelated, kIid, kBinaryTree };

std::string_view MechanismName(MechanismKind kind);
absl::StatusOr<MechanismKind> ParseMechanism(std::string_view name);

// Confidential histogram x. Entries are finite.
class DataVector {
 public:
  static absl::StatusOr<DataVector> Create(std::vector<double> values);
  // n entries drawn uniformly from the integers 1..1000.
  static DataVector SyntheticUniform(std::size_t n, SeededRng& rng);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

 private:
  explicit DataVector(std::vector<double> values)
      : values_(std::move(values)) {}

  std::vector<double> values_;
};

// Inclusive leaf range [lo, hi].
struct RangeQuery {
  std::size_t lo;
  std::size_t hi;

  std::size_t length() const { return hi - lo + 1; }
  friend bool operator==(const RangeQuery&, const RangeQuery&) = default;
};

// Everything a consumer needs to write down the exact noise law.
struct NoiseMeta {
  MechanismKind mechanism;
  double sigma;
  std::uint64_t seed;
  // Depth of the (padded) perfect tree; -1 for an explicit general tree.
  int depth;
  std::size_t padded_size;
  // "C_k" for the tree covariance, "identity" for i.i.d., "general_tree".
  std::string covariance;
};

// x + noise, with prefix sums so that any range is answered in O(1). All
// answers are linear reads of the same vector and so mutually consistent.
class PrivatizedVector {
 public:
  PrivatizedVector(std::vector<double> values, NoiseMeta meta);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  // prefix()[j] = sum of values[0..j).
  std::span<const double> prefix() const { return prefix_; }
  const NoiseMeta& meta() const { return meta_; }

  // Range sum without bounds checking; see AnswerRange.
  double Answer(const RangeQuery& q) const {
    return prefix_[q.hi + 1] - prefix_[q.lo];
  }

 private:
  std::vector<double> values_;
  std::vector<double> prefix_;
  NoiseMeta meta_;
};

absl::Status ValidateRange(const RangeQuery& q, std::size_t n);

// Correlated input perturbation. x is padded with zeros to the next power of
// two 2^k, leaf noise from CascadeSample(k, sigma) is added, and the result is
// truncated back to x.size().
absl::StatusOr<PrivatizedVector> Perturb(const DataVector& x,
                                         const CalibratedSigma& sigma,
                                         SeededRng& rng);

// Correlated input perturbation over an explicit hierarchy; x.size() must
// equal the number of leaves of `tree`.
absl::StatusOr<PrivatizedVector> PerturbGeneralTree(const DataVector& x,
                                                    const GeneralTree& tree,
                                                    const CalibratedSigma& sigma,
                                                    SeededRng& rng);

absl::StatusOr<double> AnswerRange(const PrivatizedVector& p,
                                   const RangeQuery& q);

// Canonical cover of [lo, hi] by maximal subtrees of the perfect tree of the
// given depth, as level-order node indices from left to right. Pairwise
// disjoint; at most 2k - 2 nodes for k >= 2.
absl::StatusOr<std::vector<std::size_t>> RangeDecompose(int depth,
                                                        const RangeQuery& q);

// Smallest k with 2^k >= n.
int CeilLog2(std::size_t n);

}  // namespace corrdp

#endif  // CORRDP_MECHANISM_H_
