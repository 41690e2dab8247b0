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
#include "gwpriv/common_information.hpp"

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace gwpriv {
namespace {

using testing::CodeOf;

WynerParams Seeded(std::uint64_t seed) {
  WynerParams params;
  params.seed = seed;
  return params;
}

TEST(GkTest, DsbsWithIndependentBitHasNothingInCommon) {
  const CommonInfoResult c = gk_common_information(testing::DsbsWithIndependentBit(0.11));
  EXPECT_EQ(c.value, 0.0);
  EXPECT_EQ(c.witness->w_cardinality(), 1u);
  EXPECT_EQ(c.method, CommonInfoMethod::kGkComponents);
}

TEST(GkTest, SharedBitIsTheCommonPart) {
  const JointPmf pmf = testing::SharedBitSources();
  const CommonInfoResult c = gk_common_information(pmf);
  EXPECT_NEAR(c.value, 1.0, 1e-9);
  EXPECT_EQ(*c.witness, testing::SharedBitChannel());
  EXPECT_LE(c.diagnostics.residual, 1e-12);
}

TEST(GkTest, EqualAndIndependentBits) {
  EXPECT_NEAR(gk_common_information(testing::EqualBits()).value, 1.0, 1e-12);
  EXPECT_EQ(gk_common_information(testing::IndependentBits()).value, 0.0);
}

TEST(GkTest, LabelsFollowFirstAppearance) {
  // Two blocks: {X1=1,X2=0} then {X1=0,X2=1}.
  const JointPmf pmf({"A", "B"}, {2, 2}, {0.0, 0.4, 0.6, 0.0});
  const auto [labels, count] = gk_component_labels(pmf);
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(labels[1], 0u);
  EXPECT_EQ(labels[2], 1u);
  EXPECT_NEAR(gk_common_information(pmf).value, binary_entropy(0.4), 1e-12);
}

TEST(GkTest, NeedsTwoSources) {
  const JointPmf single({"A"}, {2}, {0.5, 0.5});
  EXPECT_EQ(CodeOf([&] { gk_common_information(single); }), ErrorCode::kKTooSmall);
}

TEST(GkTest, MatchesBruteForceOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const JointPmf pmf = testing::RandomJoint(seed);
    const CommonInfoResult fast = gk_common_information(pmf);
    const CommonInfoResult oracle = gk_brute_force_oracle(pmf);
    EXPECT_NEAR(fast.value, oracle.value, 1e-9) << "seed " << seed;
    EXPECT_EQ(oracle.method, CommonInfoMethod::kBruteForce);
  }
}

TEST(GkTest, OracleRejectsLargeSupport) {
  EXPECT_EQ(CodeOf([] { gk_brute_force_oracle(testing::SharedBitSources()); }),
            ErrorCode::kSupportTooLarge);
}

TEST(PairwiseTest, BoundsAndTies) {
  const PairwiseBounds dsbs = pairwise_mi_bounds(testing::DsbsWithIndependentBit(0.11));
  EXPECT_NEAR(dsbs.min_mi, 0.0, 1e-12);
  EXPECT_NEAR(dsbs.max_mi, 1.0 - binary_entropy(0.11), 1e-12);
  EXPECT_EQ(dsbs.argmax, (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(dsbs.argmin, (std::pair<std::size_t, std::size_t>{0, 2}));

  const PairwiseBounds shared = pairwise_mi_bounds(testing::SharedBitSources());
  EXPECT_NEAR(shared.min_mi, 1.0, 1e-12);
  EXPECT_NEAR(shared.max_mi, 1.0, 1e-12);
  EXPECT_EQ(shared.argmin, (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(WynerTest, SimpleSources) {
  const CommonInfoResult independent =
      wyner_estimate(testing::IndependentBits(), Seeded(1));
  EXPECT_TRUE(independent.diagnostics.converged);
  EXPECT_NEAR(independent.value, 0.0, 1e-6);

  const CommonInfoResult equal = wyner_estimate(testing::EqualBits(), Seeded(1));
  EXPECT_TRUE(equal.diagnostics.converged);
  EXPECT_NEAR(equal.value, 1.0, 1e-6);
}

TEST(WynerTest, SharedBitSources) {
  const CommonInfoResult b = wyner_estimate(testing::SharedBitSources(), Seeded(3));
  EXPECT_TRUE(b.diagnostics.converged);
  EXPECT_NEAR(b.value, 1.0, 1e-3);
}

TEST(WynerTest, WitnessIsFeasibleAndCertifiesValue) {
  const JointPmf pmf = testing::DsbsWithIndependentBit(0.11);
  const CommonInfoResult b = wyner_estimate(pmf, Seeded(5));
  ASSERT_TRUE(b.witness.has_value());
  const JointPmf joined = join_with_aux(pmf, *b.witness);
  EXPECT_NEAR(mutual_information(joined, {0, 1, 2}, {3}), b.value, 1e-12);
  // Conditional independence given W, checked as total correlation.
  const double tc = entropy(joined, {0, 3}) + entropy(joined, {1, 3}) +
                    entropy(joined, {2, 3}) - 2.0 * entropy(joined, {3}) -
                    entropy(joined, {0, 1, 2, 3});
  EXPECT_NEAR(tc, 0.0, 1e-9);
  EXPECT_GE(b.value, 1.0 - binary_entropy(0.11) - 1e-3);
}

TEST(WynerTest, Deterministic) {
  const JointPmf pmf = testing::RandomJoint(17);
  const CommonInfoResult a = wyner_estimate(pmf, Seeded(9));
  const CommonInfoResult b = wyner_estimate(pmf, Seeded(9));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(*a.witness, *b.witness);
  WynerParams threaded = Seeded(9);
  threaded.threads = 3;
  EXPECT_EQ(wyner_estimate(pmf, threaded).value, a.value);
}

TEST(WynerTest, RejectsBadParameters) {
  WynerParams params = Seeded(1);
  params.w_cardinality = 1;
  EXPECT_EQ(CodeOf([&] { wyner_estimate(testing::IndependentBits(), params); }),
            ErrorCode::kInvalidArgument);
}

TEST(ChainTest, HoldsOnRandomJoints) {
  std::size_t converged = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BoundsReport report =
        verify_chain(testing::RandomJoint(seed), Seeded(seed));
    EXPECT_TRUE(report.chain_holds) << "seed " << seed;
    ASSERT_EQ(report.links.size(), 3u);
    EXPECT_EQ(report.links[2].evaluated, report.b_converged);
    if (report.b_converged) ++converged;
  }
  EXPECT_GE(converged, 24u);
}

TEST(MonotonicityTest, DroppingASourceNeverLowersC) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const JointPmf pmf = testing::RandomJoint(seed, 3);
    for (std::size_t drop = 0; drop < 3; ++drop) {
      EXPECT_TRUE(verify_monotonicity(pmf, drop).holds);
    }
  }
  EXPECT_EQ(CodeOf([] { verify_monotonicity(testing::EqualBits(), 0); }),
            ErrorCode::kKTooSmall);
}

TEST(Prop4Test, Statuses) {
  const Prop4Report shared = verify_prop4(testing::SharedBitSources(), Seeded(2));
  EXPECT_EQ(shared.status, Prop4Status::kConclusionHolds);
  EXPECT_TRUE(shared.b_estimate.has_value());

  const Prop4Report dsbs =
      verify_prop4(testing::DsbsWithIndependentBit(0.11), Seeded(2));
  EXPECT_EQ(dsbs.status, Prop4Status::kPreconditionNotMet);
  EXPECT_FALSE(dsbs.b_estimate.has_value());

  // Equal pairwise informations but B well above them: nothing to conclude.
  const Prop4Report xor_bits = verify_prop4(
      JointPmf({"A", "B", "C"}, {2, 2, 2},
               {0.25, 0.0, 0.0, 0.25, 0.0, 0.25, 0.25, 0.0}),
      Seeded(2));
  EXPECT_EQ(xor_bits.status, Prop4Status::kHypothesisNotEstablished);
}

TEST(C2Test, RateIdentityUnderComponentWitness) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const C2Report report = verify_c2(testing::RandomJoint(seed));
    EXPECT_LE(report.max_residual, 1e-9);
  }
  const C2Report shared = verify_c2(testing::SharedBitSources());
  EXPECT_NEAR(shared.common_rate, 1.0, 1e-9);
  for (double h : shared.conditional_entropies) EXPECT_NEAR(h, 1.0, 1e-9);
}

TEST(MethodNameTest, Names) {
  EXPECT_EQ(MethodName(CommonInfoMethod::kGkComponents), "gk_components");
  EXPECT_EQ(MethodName(CommonInfoMethod::kWynerAltMin), "wyner_alt_min");
  EXPECT_EQ(Prop4StatusName(Prop4Status::kPreconditionNotMet), "precondition not met");
}

}  // namespace
}  // namespace gwpriv
