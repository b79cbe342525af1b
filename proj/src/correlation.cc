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

#include "corrdp/correlation.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace corrdp {
namespace {

absl::Status CheckDepth(int depth, int dense_cap) {
  if (depth < 1 || depth > dense_cap) {
    return absl::OutOfRangeError(absl::StrCat(
        "depth ", depth, " outside dense range [1, ", dense_cap, "]"));
  }
  return absl::OkStatus();
}

}  // namespace

DenseMatrix DenseMatrix::Multiply(const DenseMatrix& other) const {
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t l = 0; l < dim_; ++l) {
      const double a = (*this)(i, l);
      if (a == 0.0) continue;
      const double* b = other.data_.data() + l * dim_;
      double* o = out.data_.data() + i * dim_;
      for (std::size_t j = 0; j < dim_; ++j) o[j] += a * b[j];
    }
  }
  return out;
}

double DenseMatrix::MaxAbsDiff(const DenseMatrix& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

DenseMatrix DenseMatrix::Identity(std::size_t dim) {
  DenseMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

absl::StatusOr<DenseMatrix> BuildCorrelation(int depth, int dense_cap) {
  if (absl::Status s = CheckDepth(depth, dense_cap); !s.ok()) return s;
  const std::size_t n = std::size_t{1} << depth;
  DenseMatrix c(n);
  // Block recursion, upper triangle only: after step i the leading
  // 2^i x 2^i block holds C_i. Growing to C_{i+1} copies that block onto the
  // lower-right diagonal block and fills the upper-right block with
  // -2^-(2i+1). Every value is dyadic and therefore exact.
  c(0, 0) = 1.0;
  c(1, 1) = 1.0;
  c(0, 1) = -0.5;
  for (int i = 1; i < depth; ++i) {
    const std::size_t half = std::size_t{1} << i;
    const double cross = -std::ldexp(1.0, -(2 * i + 1));
    for (std::size_t r = 0; r < half; ++r) {
      for (std::size_t col = r; col < half; ++col) {
        c(r + half, col + half) = c(r, col);
      }
      for (std::size_t col = half; col < 2 * half; ++col) c(r, col) = cross;
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = r + 1; col < n; ++col) c(col, r) = c(r, col);
  }
  return c;
}

absl::StatusOr<DenseMatrix> BuildPrecision(int depth, int dense_cap) {
  if (absl::Status s = CheckDepth(depth, dense_cap); !s.ok()) return s;
  // Entries are multiples of 1/3; run the block recursion on 3 * C^{-1} in
  // integers and divide once at the end.
  std::vector<std::int64_t> thirds = {4, 2, 2, 4};
  std::size_t dim = 2;
  for (int j = 2; j <= depth; ++j) {
    const std::size_t next = 2 * dim;
    std::vector<std::int64_t> grown(next * next);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        const std::int64_t diag_block = thirds[r * dim + c] + 1;
        grown[r * next + c] = diag_block;
        grown[(r + dim) * next + (c + dim)] = diag_block;
        grown[r * next + (c + dim)] = 2;
        grown[(r + dim) * next + c] = 2;
      }
    }
    thirds = std::move(grown);
    dim = next;
  }
  DenseMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    out(r, r) = static_cast<double>(thirds[r * dim + r]) / 3.0;
    for (std::size_t c = r + 1; c < dim; ++c) {
      const double v = static_cast<double>(thirds[r * dim + c]) / 3.0;
      out(r, c) = v;
      out(c, r) = v;
    }
  }
  return out;
}

double PrecisionDiagMax(int depth) { return 1.0 + depth / 3.0; }

RangeVarianceTable::RangeVarianceTable(const DenseMatrix& m)
    : dim_(m.dim()), prefix_((m.dim() + 1) * (m.dim() + 1), 0.0) {
  const std::size_t w = dim_ + 1;
  for (std::size_t r = 0; r < dim_; ++r) {
    double row_run = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
      row_run += m(r, c);
      prefix_[(r + 1) * w + (c + 1)] = prefix_[r * w + (c + 1)] + row_run;
    }
  }
}

double RangeVarianceTable::RangeSum(std::size_t lo, std::size_t hi) const {
  const std::size_t e = hi + 1;
  return At(e, e) - At(lo, e) - At(e, lo) + At(lo, lo);
}

absl::StatusOr<double> MaxRangeVariance(int depth, int dense_cap) {
  absl::StatusOr<DenseMatrix> c = BuildCorrelation(depth, dense_cap);
  if (!c.ok()) return c.status();
  const RangeVarianceTable table(*c);
  double best = 0.0;
  for (std::size_t lo = 0; lo < table.size(); ++lo) {
    for (std::size_t hi = lo; hi < table.size(); ++hi) {
      best = std::max(best, table.RangeSum(lo, hi));
    }
  }
  return best;
}

}  // namespace corrdp
