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

#include <immintrin.h>

#include "tables.h"

#ifndef __AVX2__
#error "avx2.cc must be compiled with -mavx2"
#endif

namespace corrdp::kernels {
namespace {

void SplitInterleaved(const double* parents, const double* y, double* children,
                      std::size_t m) {
  const __m256d half_w = _mm256_set1_pd(0.5);
  const __m256d split_w = _mm256_set1_pd(kSplitWeight);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d half = _mm256_mul_pd(_mm256_loadu_pd(parents + i), half_w);
    const __m256d shift = _mm256_mul_pd(_mm256_loadu_pd(y + i), split_w);
    const __m256d left = _mm256_add_pd(half, shift);
    const __m256d right = _mm256_sub_pd(half, shift);
    // lo = l0 r0 l2 r2, hi = l1 r1 l3 r3
    const __m256d lo = _mm256_unpacklo_pd(left, right);
    const __m256d hi = _mm256_unpackhi_pd(left, right);
    _mm256_storeu_pd(children + 2 * i, _mm256_permute2f128_pd(lo, hi, 0x20));
    _mm256_storeu_pd(children + 2 * i + 4,
                     _mm256_permute2f128_pd(lo, hi, 0x31));
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
  const __m256d half_w = _mm256_set1_pd(0.5);
  const __m256d split_w = _mm256_set1_pd(kSplitWeight);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d half = _mm256_mul_pd(_mm256_loadu_pd(parents + i), half_w);
    const __m256d shift = _mm256_mul_pd(_mm256_loadu_pd(y + i), split_w);
    _mm256_storeu_pd(left + i, _mm256_add_pd(half, shift));
    _mm256_storeu_pd(right + i, _mm256_sub_pd(half, shift));
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
  for (; i + 4 <= m; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < m; ++i) out[i] = a[i] + b[i];
}

void AccumulateOuter(const double* v, double* acc, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    const double vi = v[i];
    const __m256d bvi = _mm256_set1_pd(vi);
    double* row = acc + i * m;
    std::size_t j = i;
    for (; j + 4 <= m; j += 4) {
      const __m256d prod = _mm256_mul_pd(bvi, _mm256_loadu_pd(v + j));
      _mm256_storeu_pd(row + j, _mm256_add_pd(_mm256_loadu_pd(row + j), prod));
    }
    for (; j < m; ++j) row[j] += vi * v[j];
  }
}

void AccumulateSquares(const double* v, double* acc, std::size_t m) {
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i),
                                            _mm256_mul_pd(x, x)));
  }
  for (; i < m; ++i) acc[i] += v[i] * v[i];
}

}  // namespace

const KernelTable& Avx2Kernels() {
  static const KernelTable table{"avx2", SplitInterleaved, SplitPlanar, Add,
                                 AccumulateOuter, AccumulateSquares};
  return table;
}

}  // namespace corrdp::kernels
