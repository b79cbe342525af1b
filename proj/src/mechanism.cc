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

#include "corrdp/mechanism.h"

#include <bit>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "corrdp/kernels.h"
#include "corrdp/sampler.h"

namespace corrdp {

std::string_view MechanismName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kCorrelated:
      return "correlated";
    case MechanismKind::kIid:
      return "iid";
    case MechanismKind::kBinaryTree:
      return "btree";
  }
  return "unknown";
}

absl::StatusOr<MechanismKind> ParseMechanism(std::string_view name) {
  if (name == "correlated") return MechanismKind::kCorrelated;
  if (name == "iid") return MechanismKind::kIid;
  if (name == "btree") return MechanismKind::kBinaryTree;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown mechanism '", std::string(name), "'"));
}

absl::StatusOr<DataVector> DataVector::Create(std::vector<double> values) {
  if (values.empty()) return absl::InvalidArgumentError("empty data vector");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("data entry ", i, " is not finite"));
    }
  }
  return DataVector(std::move(values));
}

DataVector DataVector::SyntheticUniform(std::size_t n, SeededRng& rng) {
  std::vector<double> values(n);
  for (double& v : values) v = static_cast<double>(1 + rng.UniformIndex(1000));
  return DataVector(std::move(values));
}

PrivatizedVector::PrivatizedVector(std::vector<double> values, NoiseMeta meta)
    : values_(std::move(values)),
      prefix_(values_.size() + 1, 0.0),
      meta_(std::move(meta)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    prefix_[i + 1] = prefix_[i] + values_[i];
  }
}

int CeilLog2(std::size_t n) {
  return n <= 1 ? 0 : std::bit_width(n - 1);
}

absl::Status ValidateRange(const RangeQuery& q, std::size_t n) {
  if (q.lo > q.hi || q.hi >= n) {
    return absl::OutOfRangeError(absl::StrCat(
        "range [", q.lo, ", ", q.hi, "] invalid for length ", n));
  }
  return absl::OkStatus();
}

absl::StatusOr<PrivatizedVector> Perturb(const DataVector& x,
                                         const CalibratedSigma& sigma,
                                         SeededRng& rng) {
  const int depth = CeilLog2(x.size());
  absl::StatusOr<NoiseTree> noise = CascadeSample(depth, sigma.sigma, rng);
  if (!noise.ok()) return noise.status();
  std::vector<double> out(x.size());
  kernels::ActiveKernels().add(x.values().data(), noise->leaves().data(),
                               out.data(), x.size());
  return PrivatizedVector(
      std::move(out),
      NoiseMeta{MechanismKind::kCorrelated, sigma.sigma, rng.seed(), depth,
                std::size_t{1} << depth, absl::StrCat("C_", depth)});
}

absl::StatusOr<PrivatizedVector> PerturbGeneralTree(
    const DataVector& x, const GeneralTree& tree, const CalibratedSigma& sigma,
    SeededRng& rng) {
  if (tree.leaves().size() != x.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("tree has ", tree.leaves().size(), " leaves but data has ",
                     x.size(), " entries"));
  }
  absl::StatusOr<std::vector<double>> noise =
      GeneralTreeSample(tree, sigma.sigma, rng);
  if (!noise.ok()) return noise.status();
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x.values()[i] + (*noise)[tree.leaves()[i]];
  }
  return PrivatizedVector(
      std::move(out), NoiseMeta{MechanismKind::kCorrelated, sigma.sigma,
                                rng.seed(), -1, x.size(), "general_tree"});
}

absl::StatusOr<double> AnswerRange(const PrivatizedVector& p,
                                   const RangeQuery& q) {
  if (absl::Status s = ValidateRange(q, p.size()); !s.ok()) return s;
  return p.Answer(q);
}

absl::StatusOr<std::vector<std::size_t>> RangeDecompose(int depth,
                                                        const RangeQuery& q) {
  if (depth < 0 || depth > kMaxSampleDepth) {
    return absl::OutOfRangeError(absl::StrCat("bad depth ", depth));
  }
  const std::size_t n = std::size_t{1} << depth;
  if (absl::Status s = ValidateRange(q, n); !s.ok()) return s;
  // Work in half-open leaf coordinates. At each level take the stray node on
  // either side, then move up. Left nodes come out in order; right nodes come
  // out in reverse and are appended reversed at the end.
  std::vector<std::size_t> left_part;
  std::vector<std::size_t> right_part;
  std::size_t lo = q.lo;
  std::size_t hi = q.hi + 1;
  std::size_t width = n;
  while (lo < hi) {
    const std::size_t base = width - 1;
    if (lo & 1) left_part.push_back(base + lo++);
    if (hi & 1) right_part.push_back(base + --hi);
    lo >>= 1;
    hi >>= 1;
    width >>= 1;
  }
  left_part.insert(left_part.end(), right_part.rbegin(), right_part.rend());
  return left_part;
}

}  // namespace corrdp
