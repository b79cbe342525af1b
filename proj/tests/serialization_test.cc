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

#include <sstream>

#include "gtest/gtest.h"

namespace corrdp {
namespace {

NoiseTree Sample() {
  SeededRng rng(123);
  return *CascadeSample(4, 2.5, rng);
}

void ExpectSame(const NoiseTree& a, const NoiseTree& b) {
  EXPECT_EQ(a.depth(), b.depth());
  EXPECT_EQ(a.sigma(), b.sigma());
  EXPECT_EQ(a.seed(), b.seed());
  ASSERT_EQ(a.node_count(), b.node_count());
  for (std::size_t m = 0; m < a.node_count(); ++m) EXPECT_EQ(a[m], b[m]);
}

TEST(SerializationTest, JsonRoundTripIsExact) {
  const NoiseTree t = Sample();
  absl::StatusOr<NoiseTree> back = NoiseTreeFromJson(NoiseTreeToJson(t));
  ASSERT_TRUE(back.ok()) << back.status();
  ExpectSame(t, *back);
}

TEST(SerializationTest, BinaryRoundTripIsExact) {
  const NoiseTree t = Sample();
  std::stringstream buf;
  ASSERT_TRUE(WriteNoiseTreeBinary(t, buf).ok());
  EXPECT_EQ(buf.str().size(), 36u + 8u * t.node_count());
  EXPECT_EQ(buf.str().substr(0, 8), "CDPNTREE");
  absl::StatusOr<NoiseTree> back = ReadNoiseTreeBinary(buf);
  ASSERT_TRUE(back.ok()) << back.status();
  ExpectSame(t, *back);
}

TEST(SerializationTest, CorruptJson) {
  EXPECT_EQ(NoiseTreeFromJson("{").status().code(),
            absl::StatusCode::kDataLoss);
  EXPECT_EQ(NoiseTreeFromJson("[1, 2]").status().code(),
            absl::StatusCode::kDataLoss);
  EXPECT_EQ(NoiseTreeFromJson(R"({"depth": 1, "sigma": 1, "seed": 0})")
                .status()
                .code(),
            absl::StatusCode::kDataLoss);
  EXPECT_EQ(NoiseTreeFromJson(
                R"({"depth": 1, "sigma": 1, "seed": 0, "values": [1, 2]})")
                .status()
                .code(),
            absl::StatusCode::kDataLoss);
  EXPECT_EQ(NoiseTreeFromJson(
                R"({"depth": 0, "sigma": -1, "seed": 0, "values": [1]})")
                .status()
                .code(),
            absl::StatusCode::kDataLoss);
  EXPECT_EQ(NoiseTreeFromJson(
                R"({"depth": "x", "sigma": 1, "seed": 0, "values": [1]})")
                .status()
                .code(),
            absl::StatusCode::kDataLoss);
}

TEST(SerializationTest, CorruptBinary) {
  const NoiseTree t = Sample();
  std::stringstream good;
  ASSERT_TRUE(WriteNoiseTreeBinary(t, good).ok());
  const std::string bytes = good.str();

  std::stringstream bad_magic(std::string("XDPNTREE") + bytes.substr(8));
  EXPECT_EQ(ReadNoiseTreeBinary(bad_magic).status().code(),
            absl::StatusCode::kDataLoss);

  std::stringstream short_header(bytes.substr(0, 20));
  EXPECT_EQ(ReadNoiseTreeBinary(short_header).status().code(),
            absl::StatusCode::kDataLoss);

  std::stringstream short_values(bytes.substr(0, bytes.size() - 3));
  EXPECT_EQ(ReadNoiseTreeBinary(short_values).status().code(),
            absl::StatusCode::kDataLoss);

  std::string wrong_count = bytes;
  wrong_count[28] = static_cast<char>(wrong_count[28] + 1);
  std::stringstream wc(wrong_count);
  EXPECT_EQ(ReadNoiseTreeBinary(wc).status().code(),
            absl::StatusCode::kDataLoss);

  // A header claiming the deepest tree must fail cleanly on truncation.
  std::string deep = bytes.substr(0, 36);
  deep[8] = 30;
  const std::uint64_t count = (std::uint64_t{2} << 30) - 1;
  for (int i = 0; i < 8; ++i) deep[28 + i] = static_cast<char>(count >> (8 * i));
  std::stringstream ds(deep);
  EXPECT_EQ(ReadNoiseTreeBinary(ds).status().code(),
            absl::StatusCode::kDataLoss);
}

}  // namespace
}  // namespace corrdp
