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

#include "corrdp/serialization.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>

#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace corrdp {
namespace {

constexpr char kMagic[8] = {'C', 'D', 'P', 'N', 'T', 'R', 'E', 'E'};

template <typename T>
void PutLittleEndian(std::ostream& out, T value) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &value, sizeof(T));
  char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  }
  out.write(buf, sizeof(T));
}

template <typename T>
bool GetLittleEndian(std::istream& in, T& value) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) return false;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bits |= std::uint64_t{buf[i]} << (8 * i);
  }
  std::memcpy(&value, &bits, sizeof(T));
  return true;
}

absl::Status CheckShape(int depth, double sigma, std::size_t count) {
  if (depth < 0 || depth > kMaxSampleDepth) {
    return absl::DataLossError(absl::StrCat("bad depth ", depth));
  }
  if (absl::Status s = ValidateSigma(sigma); !s.ok()) {
    return absl::DataLossError(s.message());
  }
  const std::size_t expected = (std::size_t{2} << depth) - 1;
  if (count != expected) {
    return absl::DataLossError(absl::StrCat("expected ", expected,
                                            " values, found ", count));
  }
  return absl::OkStatus();
}

}  // namespace

std::string NoiseTreeToJson(const NoiseTree& tree) {
  nlohmann::json j;
  j["depth"] = tree.depth();
  j["sigma"] = tree.sigma();
  j["seed"] = tree.seed();
  j["values"] = std::vector<double>(tree.values().begin(), tree.values().end());
  return j.dump();
}

absl::StatusOr<NoiseTree> NoiseTreeFromJson(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::DataLossError("noise tree JSON does not parse");
  }
  try {
    const int depth = j.at("depth").get<int>();
    const double sigma = j.at("sigma").get<double>();
    const auto seed = j.at("seed").get<std::uint64_t>();
    auto values = j.at("values").get<std::vector<double>>();
    if (absl::Status s = CheckShape(depth, sigma, values.size()); !s.ok()) {
      return s;
    }
    return NoiseTree(depth, sigma, seed, std::move(values));
  } catch (const nlohmann::json::exception& e) {
    return absl::DataLossError(absl::StrCat("noise tree JSON: ", e.what()));
  }
}

absl::Status WriteNoiseTreeBinary(const NoiseTree& tree, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  PutLittleEndian<std::int32_t>(out, tree.depth());
  PutLittleEndian<double>(out, tree.sigma());
  PutLittleEndian<std::uint64_t>(out, tree.seed());
  PutLittleEndian<std::uint64_t>(out, tree.node_count());
  for (double v : tree.values()) PutLittleEndian<double>(out, v);
  if (!out) return absl::UnavailableError("write failed");
  return absl::OkStatus();
}

absl::StatusOr<NoiseTree> ReadNoiseTreeBinary(std::istream& in) {
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    return absl::DataLossError("missing noise tree magic");
  }
  std::int32_t depth = 0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  if (!GetLittleEndian(in, depth) || !GetLittleEndian(in, sigma) ||
      !GetLittleEndian(in, seed) || !GetLittleEndian(in, count)) {
    return absl::DataLossError("truncated noise tree header");
  }
  if (absl::Status s = CheckShape(depth, sigma, count); !s.ok()) return s;
  // Grow as values arrive so a corrupt header cannot force a huge allocation.
  std::vector<double> values;
  values.reserve(std::min<std::uint64_t>(count, std::uint64_t{1} << 20));
  for (std::uint64_t i = 0; i < count; ++i) {
    double v = 0.0;
    if (!GetLittleEndian(in, v)) {
      return absl::DataLossError("truncated noise tree values");
    }
    values.push_back(v);
  }
  return NoiseTree(depth, sigma, seed, std::move(values));
}

}  // namespace corrdp
