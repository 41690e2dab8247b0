// Copyright 2026 The gwpriv Authors
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
#include "gwpriv/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "support/fixtures.hpp"

namespace gwpriv {
namespace {

using testing::CodeOf;

TEST(IoTest, PmfRoundTripIsBitExact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const JointPmf pmf = testing::RandomJoint(seed);
    EXPECT_EQ(parse_pmf(format_pmf(pmf)), pmf);
  }
  const JointPmf uniform = testing::IndependentBits();
  EXPECT_EQ(parse_pmf(format_pmf(uniform)), uniform);
}

TEST(IoTest, AuxRoundTripIsBitExact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const JointPmf pmf = testing::RandomJoint(seed);
    const AuxChannel w = testing::RandomChannel(pmf, seed);
    EXPECT_EQ(parse_aux(format_aux(w)), w);
  }
}

TEST(IoTest, StreamsAndFiles) {
  const JointPmf pmf = testing::DsbsWithIndependentBit(0.11);
  std::stringstream buffer;
  write_pmf(pmf, buffer);
  EXPECT_EQ(read_pmf(buffer), pmf);

  const auto path = std::filesystem::temp_directory_path() / "gwpriv_io_test.json";
  save_pmf(pmf, path);
  EXPECT_EQ(load_pmf(path), pmf);
  const AuxChannel w = AuxChannel::Constant(pmf.size());
  save_aux(w, path);
  EXPECT_EQ(load_aux(path), w);
  std::filesystem::remove(path);
}

TEST(IoTest, MissingCardinalitiesIsParseError) {
  const std::string doc = R"({"variables": ["A"], "pmf": [0.5, 0.5]})";
  try {
    parse_pmf(doc);
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("cardinalities"), std::string::npos);
  }
}

TEST(IoTest, MalformedTextReportsPosition) {
  try {
    parse_pmf("{\n  \"variables\": [\"A\"\n");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
}

TEST(IoTest, WrongTypesAndInvariants) {
  EXPECT_EQ(CodeOf([] {
              parse_pmf(R"({"variables": ["A"], "cardinalities": ["2"], "pmf": [1]})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] {
              parse_pmf(R"({"variables": ["A"], "cardinalities": [2], "pmf": [0.5, 0.6]})");
            }),
            ErrorCode::kNotNormalized);
  EXPECT_EQ(CodeOf([] { parse_aux(R"({"rows": [[1]]})"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { load_pmf("/nonexistent/gwpriv.json"); }),
            ErrorCode::kParseError);
}

TEST(IoTest, DataDocumentsLoad) {
  const std::filesystem::path data = GWPRIV_DATA_DIR;
  EXPECT_EQ(load_pmf(data / "dsbs_independent_bit.json"),
            testing::DsbsWithIndependentBit(0.11));
  EXPECT_EQ(load_pmf(data / "shared_bit.json"), testing::SharedBitSources());
  EXPECT_EQ(load_aux(data / "shared_bit_w_x0.json"), testing::SharedBitChannel());
  EXPECT_EQ(load_pmf(data / "equal_bits.json"), testing::EqualBits());
}

}  // namespace
}  // namespace gwpriv
