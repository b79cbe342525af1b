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

#ifndef CORRDP_SERIALIZATION_H_
#define CORRDP_SERIALIZATION_H_

#include <iosfwd>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "corrdp/sampler.h"

namespace corrdp {

// JSON form: {"depth": k, "sigma": s, "seed": u64, "values": [...]} with
// 2^(k+1) - 1 values in level order. Doubles are written with round-trip
// precision.
std::string NoiseTreeToJson(const NoiseTree& tree);
absl::StatusOr<NoiseTree> NoiseTreeFromJson(const std::string& text);

// Binary form, all fields little-endian:
//   bytes 0-7    magic "CDPNTREE"
//   bytes 8-11   int32 depth
//   bytes 12-19  float64 sigma
//   bytes 20-27  uint64 seed
//   bytes 28-35  uint64 value count (2^(depth+1) - 1)
//   then         value count float64 values in level order
absl::Status WriteNoiseTreeBinary(const NoiseTree& tree, std::ostream& out);
absl::StatusOr<NoiseTree> ReadNoiseTreeBinary(std::istream& in);

}  // namespace corrdp

#endif  // CORRDP_SERIALIZATION_H_
