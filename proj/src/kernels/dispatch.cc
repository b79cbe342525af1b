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

#include <cstdlib>
#include <string_view>
#include <vector>

#include "corrdp/kernels.h"
#include "tables.h"

namespace corrdp::kernels {
namespace {

std::vector<const KernelTable*> DetectTables() {
  std::vector<const KernelTable*> tables = {&ScalarKernels()};
#if defined(CORRDP_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) tables.push_back(&Avx2Kernels());
#endif
#if defined(CORRDP_HAVE_NEON)
  tables.push_back(&NeonKernels());
#endif
  return tables;
}

const std::vector<const KernelTable*>& Tables() {
  static const std::vector<const KernelTable*> tables = DetectTables();
  return tables;
}

}  // namespace

const KernelTable& ActiveKernels() {
  static const KernelTable* active = [] {
    const char* force = std::getenv("CORRDP_FORCE_SCALAR");
    if (force != nullptr && std::string_view(force) == "1") {
      return &ScalarKernels();
    }
    return Tables().back();
  }();
  return *active;
}

std::span<const KernelTable* const> AvailableKernels() { return Tables(); }

}  // namespace corrdp::kernels
