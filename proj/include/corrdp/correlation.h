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

#ifndef CORRDP_CORRELATION_H_
#define CORRDP_CORRELATION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace corrdp {

// Largest depth for which dense 2^k x 2^k matrices are built by default.
// 2^12 x 2^12 doubles is 128 MiB.
inline constexpr int kDefaultDenseCap = 12;

// Square row-major matrix of doubles. Matrices produced by this module are
// square with power-of-two dimension and exactly symmetric.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }

  double& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  double operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * dim_, dim_};
  }
  std::span<const double> data() const { return data_; }

  // Returns this * other. Both operands must have the same dimension.
  DenseMatrix Multiply(const DenseMatrix& other) const;

  // Largest |a_ij - b_ij|.
  double MaxAbsDiff(const DenseMatrix& other) const;

  static DenseMatrix Identity(std::size_t dim);

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Covariance of the leaf noises, C_k, built from the block recursion
//
//   C_1 = [[1, -1/2], [-1/2, 1]],
//   C_{i+1} = [[C_i, -J_i / 2^(2i+1)], [-J_i / 2^(2i+1), C_i]],
//
// where J_i is the all-ones 2^i x 2^i block. Leaf i is the k-bit binary
// expansion of i with the most significant bit selecting the top-level split.
absl::StatusOr<DenseMatrix> BuildCorrelation(int depth,
                                             int dense_cap = kDefaultDenseCap);

// Inverse of C_k via C_1^{-1} = [[4/3, 2/3], [2/3, 4/3]] and
// C_j^{-1} = [[C_{j-1}^{-1} + J/3, 2J/3], [2J/3, C_{j-1}^{-1} + J/3]].
absl::StatusOr<DenseMatrix> BuildPrecision(int depth,
                                           int dense_cap = kDefaultDenseCap);

// Every diagonal entry of C_k^{-1} equals 1 + k/3; no matrix is built.
double PrecisionDiagMax(int depth);

// Largest variance (unit sigma) over all contiguous leaf ranges, i.e.
// max_{i<=j} 1^T C_k[i..j, i..j] 1, from a 2-D prefix table of the dense C_k.
absl::StatusOr<double> MaxRangeVariance(int depth,
                                        int dense_cap = kDefaultDenseCap);

// 2-D inclusive prefix sums of a symmetric matrix, for O(1) evaluation of
// 1^T M[lo..hi, lo..hi] 1.
class RangeVarianceTable {
 public:
  explicit RangeVarianceTable(const DenseMatrix& m);

  std::size_t size() const { return dim_; }

  // 1^T M[lo..hi, lo..hi] 1 for inclusive 0 <= lo <= hi < size().
  double RangeSum(std::size_t lo, std::size_t hi) const;

 private:
  double At(std::size_t r, std::size_t c) const {
    return prefix_[r * (dim_ + 1) + c];
  }

  std::size_t dim_;
  // (dim+1) x (dim+1), row/column 0 are zero.
  std::vector<double> prefix_;
};

}  // namespace corrdp

#endif  // CORRDP_CORRELATION_H_
