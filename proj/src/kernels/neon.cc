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

#include <arm_neon.h>

#include "tables.h"

namespace corrdp::kernels {
namespace {

void SplitInterleaved(const double* parents, const double* y, double* children,
                      std::size_t m) {
  const float64x2_t half_w = vdupq_n_f64(0.5);
  const float64x2_t split_w = vdupq_n_f64(kSplitWeight);
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    const float64x2_t half = vmulq_f64(vld1q_f64(parents + i), half_w);
    const float64x2_t shift = vmulq_f64(vld1q_f64(y + i), split_w);
    float64x2x2_t out;
    out.val[0] = vaddq_f64(half, shift);
    out.val[1] = vsubq_f64(half, shift);
    vst2q_f64(children + 2 * i, out);
  }
  for (; i < m; ++i) {
    const double half = parents[i] * 0.5;
    const double shift = y[i] * kSplitWeight;
    children[2 * i] = half + shift;
    children[2 * i + 1] = half - shift;
  }
}

void SplitPlanar(const double* parents, const double* y, double* left,
                 double* right, std::size_t m) {
  const float64x2_t half_w = vdupq_n_f64(0.5);
  const float64x2_t split_w = vdupq_n_f64(kSplitWeight);
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    const float64x2_t half = vmulq_f64(vld1q_f64(parents + i), half_w);
    const float64x2_t shift = vmulq_f64(vld1q_f64(y + i), split_w);
    vst1q_f64(left + i, vaddq_f64(half, shift));
    vst1q_f64(right + i, vsubq_f64(half, shift));
  }
  for (; i < m; ++i) {
    const double half = parents[i] * 0.5;
    const double shift = y[i] * kSplitWeight;
    left[i] = half + shift;
    right[i] = half - shift;
  }
}

void Add(const double* a, const double* b, double* out, std::size_t m) {
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < m; ++i) out[i] = a[i] + b[i];
}

void AccumulateOuter(const double* v, double* acc, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    const double vi = v[i];
    const float64x2_t bvi = vdupq_n_f64(vi);
    double* row = acc + i * m;
    std::size_t j = i;
    for (; j + 2 <= m; j += 2) {
      const float64x2_t prod = vmulq_f64(bvi, vld1q_f64(v + j));
      vst1q_f64(row + j, vaddq_f64(vld1q_f64(row + j), prod));
    }
    for (; j < m; ++j) row[j] += vi * v[j];
  }
}

void AccumulateSquares(const double* v, double* acc, std::size_t m) {
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    const float64x2_t x = vld1q_f64(v + i);
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vmulq_f64(x, x)));
  }
  for (; i < m; ++i) acc[i] += v[i] * v[i];
}

}  // namespace

const KernelTable& NeonKernels() {
  static const KernelTable table{"neon", SplitInterleaved, SplitPlanar, Add,
                                 AccumulateOuter, AccumulateSquares};
  return table;
}

}  // namespace corrdp::kernels
