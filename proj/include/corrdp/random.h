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

#ifndef CORRDP_RANDOM_H_
#define CORRDP_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>

namespace corrdp {

// Seeded source of uniform and standard normal variates with an output
// stream fixed by the seed on every conforming platform:
//
//   bits     std::mt19937_64 (sequence fixed by the C++ standard)
//   uniform  top 53 bits scaled by 2^-53, giving [0, 1)
//   normal   Marsaglia polar method on 2u - 1 pairs; both variates of an
//            accepted pair are used, first u-based then v-based.
//
// std::normal_distribution is not used because its algorithm is
// implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextBits() { return engine_(); }

  // Uniform on [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformIndex(std::uint64_t bound);

  double StandardNormal();

  // Fills out with i.i.d. N(0, sigma^2) draws in index order.
  void FillNormal(std::span<double> out, double sigma);

  // Number of normal variates handed out so far.
  std::uint64_t normals_drawn() const { return normals_drawn_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
  std::uint64_t normals_drawn_ = 0;
};

// Seed of replicate `index` under `master`: splitmix64 finalizer applied to
// master + (index + 1) * golden-ratio increment.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

}  // namespace corrdp

#endif  // CORRDP_RANDOM_H_
