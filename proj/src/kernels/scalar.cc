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

#include "corrdp/kernels.h"
#include "tables.h"

namespace corrdp::kernels {
namespace {

void SplitInterleaved(const double* parents, const double* y, double* children,
                      std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    const double half = parents[i] * 0.5;
    const double shift = y[i] * kSplitWeight;
    children[2 * i] = half + shift;
    children[2 * i + 1] = half - shift;
  }
}

void SplitPlanar(const double* parents, const double* y, double* left,
                 double* right, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    const double half = parents[i] * 0.5;
    const double shift = y[i] * kSplitWeight;
    left[i] = half + shift;
    right[i] = half - shift;
  }
}

void Add(const double* a, const double* b, double* out, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) out[i] = a[i] + b[i];
}

void AccumulateOuter(const double* v, double* acc, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    const double vi = v[i];
    double* row = acc + i * m;
    for (std::size_t j = i; j < m; ++j) row[j] += vi * v[j];
  }
}

void AccumulateSquares(const double* v, double* acc, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) acc[i] += v[i] * v[i];
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{"scalar", SplitInterleaved, SplitPlanar, Add,
                                 AccumulateOuter, AccumulateSquares};
  return table;
}

}  // namespace corrdp::kernels
