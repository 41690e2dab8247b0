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
#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gwpriv/common_information.hpp"
#include "gwpriv/io.hpp"
#include "json.hpp"
#include "support/fixtures.hpp"

namespace gwpriv {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return (std::filesystem::path(GWPRIV_DATA_DIR) / name).string();
}

nlohmann::json Parse(const Outcome& o) { return nlohmann::json::parse(o.out); }

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"info"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"common-info", Data("shared_bit.json"), "--method", "nope"}).code,
            cli::kExitUsage);
}

TEST(CliTest, RandomizedPathsNeedSeed) {
  const Outcome o = Invoke({"common-info", Data("shared_bit.json"), "--method", "wyner"});
  EXPECT_EQ(o.code, cli::kExitUsage);
  EXPECT_NE(o.err.find("--seed"), std::string::npos);
  EXPECT_EQ(Invoke({"simulate", Data("equal_bits.json"), "--aux",
                 Data("equal_bits_w_copy.json"), "--n", "4"})
                .code,
            cli::kExitUsage);
  EXPECT_EQ(Invoke({"region", "sweep", Data("equal_bits.json"), "--grid", "0,1"}).code,
            cli::kExitUsage);
}

TEST(CliTest, DomainErrorsExitOne) {
  const Outcome missing = Invoke({"info", "/nonexistent/pmf.json"});
  EXPECT_EQ(missing.code, cli::kExitDomainError);
  EXPECT_FALSE(missing.err.empty());
  EXPECT_EQ(Invoke({"region", "corner", Data("equal_bits.json"), "--aux",
                 Data("shared_bit_w_x0.json")})
                .code,
            cli::kExitDomainError);
}

TEST(CliTest, HelpExitsZero) { EXPECT_EQ(Invoke({"--help"}).code, cli::kExitOk); }

TEST(CliTest, ThreadsMayFollowSubcommand) {
  EXPECT_EQ(Invoke({"info", Data("equal_bits.json"), "--threads", "2"}).code, cli::kExitOk);
  EXPECT_EQ(Invoke({"--threads", "2", "info", Data("equal_bits.json")}).code, cli::kExitOk);
  EXPECT_EQ(Invoke({"info", Data("equal_bits.json"), "--threads", "0"}).code,
            cli::kExitUsage);
}

TEST(CliTest, InfoReportsEntropies) {
  const Outcome o = Invoke({"info", Data("dsbs_independent_bit.json"), "--mi", "X1:X2",
                         "--entropy", "X1|X2"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const auto doc = Parse(o);
  EXPECT_EQ(doc["support_size"], 8);
  EXPECT_NEAR(doc["queries"][0]["bits"].get<double>(), binary_entropy(0.11), 1e-12);
  EXPECT_NEAR(doc["queries"][1]["bits"].get<double>(), 1.0 - binary_entropy(0.11),
              1e-12);
}

TEST(CliTest, GkMatchesLibrary) {
  const Outcome o = Invoke({"common-info", Data("shared_bit.json"), "--method", "gk"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const auto doc = Parse(o);
  EXPECT_EQ(doc["method"], "gk_components");
  EXPECT_EQ(doc["value"].get<double>(),
            gk_common_information(load_pmf(Data("shared_bit.json"))).value);
  EXPECT_EQ(doc["witness"]["w_cardinality"], 2);
}

TEST(CliTest, ReRunsAreByteIdentical) {
  const std::vector<std::string> wyner = {"common-info", Data("dsbs_independent_bit.json"),
                                          "--method", "wyner", "--seed", "5"};
  const Outcome a = Invoke(wyner);
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  EXPECT_EQ(a.out, Invoke(wyner).out);

  const std::vector<std::string> sim = {"simulate", Data("equal_bits.json"), "--aux",
                                        Data("equal_bits_w_copy.json"), "--n-grid",
                                        "4,6", "--trials", "200", "--seed", "9",
                                        "--format", "csv"};
  const Outcome s = Invoke(sim);
  ASSERT_EQ(s.code, cli::kExitOk) << s.err;
  EXPECT_EQ(s.out.rfind("# gwpriv-simulate v1\n", 0), 0u);
  EXPECT_EQ(s.out, Invoke(sim).out);
}

TEST(CliTest, ConstantCornerMatchesDeltaMax) {
  const Outcome corner = Invoke({"region", "corner", Data("shared_bit.json"), "--aux",
                              Data("shared_bit_w_const.json")});
  ASSERT_EQ(corner.code, cli::kExitOk) << corner.err;
  const Outcome verify = Invoke({"verify", Data("shared_bit.json")});
  ASSERT_EQ(verify.code, cli::kExitOk) << verify.err;
  EXPECT_EQ(Parse(corner)["delta"].get<double>(),
            Parse(verify)["delta_max"].get<double>());
}

TEST(CliTest, CheckWithGivenAuxiliary) {
  const Outcome ok = Invoke({"region", "check", Data("shared_bit.json"), "--r0", "1",
                          "--rk", "1,1,1", "--delta", "6", "--aux",
                          Data("shared_bit_w_x0.json")});
  ASSERT_EQ(ok.code, cli::kExitOk) << ok.err;
  EXPECT_EQ(Parse(ok)["verdict"], "achievable");
  const Outcome no = Invoke({"region", "check", Data("shared_bit.json"), "--r0", "0.5",
                          "--rk", "1,1,1", "--delta", "6", "--aux",
                          Data("shared_bit_w_x0.json")});
  ASSERT_EQ(no.code, cli::kExitOk) << no.err;
  EXPECT_EQ(Parse(no)["verdict"], "not_certified_by_witness");
}

TEST(CliTest, SimulateJsonFields) {
  const Outcome o = Invoke({"simulate", Data("equal_bits.json"), "--aux",
                         Data("equal_bits_w_copy.json"), "--n", "4", "--trials", "100",
                         "--seed", "3", "--exact"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const auto doc = Parse(o);
  for (const char* key : {"config", "trials", "m0", "mk", "common_rate",
                          "encoder_failure_rate", "error_rates", "targets",
                          "equivocation", "equivocation_gap"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["trials"], 100);
  EXPECT_EQ(doc["equivocation"].size(), 2u);
}

TEST(CliTest, VerifyProps) {
  const Outcome o = Invoke({"verify", Data("shared_bit.json"), "--props", "1,2,3,4",
                         "--chain", "--c2", "--seed", "2"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const auto doc = Parse(o);
  EXPECT_EQ(doc["props"]["1"]["holds"], true);
  EXPECT_EQ(doc["props"]["2"]["holds"], true);
  EXPECT_EQ(doc["props"]["4"]["status"], "conclusion holds");
  EXPECT_EQ(doc["chain"]["chain_holds"], true);
  EXPECT_LE(doc["c2"]["max_residual"].get<double>(), 1e-9);

  const Outcome pair = Invoke({"verify", Data("equal_bits.json"), "--props", "1"});
  ASSERT_EQ(pair.code, cli::kExitOk) << pair.err;
  EXPECT_EQ(Parse(pair)["props"]["1"]["status"], "not applicable");
}

}  // namespace
}  // namespace gwpriv
