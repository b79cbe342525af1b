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

#ifndef CORRDP_KERNELS_H_
#define CORRDP_KERNELS_H_

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// where the target supports it, a SIMD version chosen once at runtime. The
// SIMD versions perform the same IEEE operations in the same order as the
// scalar ones (no FMA contraction), so results are bit-identical across
// dispatch targets.

#include <cstddef>
#include <span>
#include <string_view>

namespace corrdp::kernels {

// sqrt(3)/2, the weight of the fresh draw in a split.
inline constexpr double kSplitWeight = 0.86602540378443864676;

// Interleaved split of one tree level into the next:
//   children[2i]   = parents[i] * 0.5 + y[i] * kSplitWeight
//   children[2i+1] = parents[i] * 0.5 - y[i] * kSplitWeight
// parents and y have length m, children has length 2m.
using SplitInterleavedFn = void (*)(const double* parents, const double* y,
                                    double* children, std::size_t m);

// Planar split used by the 2-D sampler: same arithmetic as above, left and
// right children written to separate arrays of length m.
using SplitPlanarFn = void (*)(const double* parents, const double* y,
                               double* left, double* right, std::size_t m);

// out[i] = a[i] + b[i].
using AddFn = void (*)(const double* a, const double* b, double* out,
                       std::size_t m);

// Upper-triangle rank-one update acc[i*m + j] += v[i] * v[j] for j >= i.
using AccumulateOuterFn = void (*)(const double* v, double* acc,
                                   std::size_t m);

// acc[i] += v[i] * v[i].
using AccumulateSquaresFn = void (*)(const double* v, double* acc,
                                     std::size_t m);

struct KernelTable {
  std::string_view name;
  SplitInterleavedFn split_interleaved;
  SplitPlanarFn split_planar;
  AddFn add;
  AccumulateOuterFn accumulate_outer;
  AccumulateSquaresFn accumulate_squares;
};

const KernelTable& ScalarKernels();

// Table for the best ISA available on this CPU; falls back to scalar. The
// environment variable CORRDP_FORCE_SCALAR=1 pins the scalar table.
const KernelTable& ActiveKernels();

// Every table usable on this CPU, scalar first. Used by equivalence tests.
std::span<const KernelTable* const> AvailableKernels();

}  // namespace corrdp::kernels

#endif  // CORRDP_KERNELS_H_
