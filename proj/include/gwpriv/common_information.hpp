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
//
// Common information of K sources.
//
//   C = max I(X̄;W) over W with W - X_k - X̄∖X_k for every k. The maximum is
//       attained by the maximal common variable: the connected component of
//       the graph linking symbols that co-occur in a positive-mass outcome.
//   B = inf I(X̄;W) over W with p(x̄|w) = Π_k p(x_k|w) and the right
//       marginal. Only upper bounds are computed, by penalized alternating
//       minimization.
//
// The chain C <= min_{i≠j} I(Xi;Xj) <= max_{i≠j} I(Xi;Xj) <= B ties them
// together and is checked by verify_chain.
#ifndef GWPRIV_COMMON_INFORMATION_HPP_
#define GWPRIV_COMMON_INFORMATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwpriv/distributions.hpp"
#include "gwpriv/infotheory.hpp"

namespace gwpriv {

enum class CommonInfoMethod {
  kGkComponents,
  kBruteForce,
  kWynerAltMin,
  kPairwiseBound,
};

std::string_view MethodName(CommonInfoMethod method);

struct CommonInfoDiagnostics {
  std::size_t iterations = 0;
  // gk: max Markov slack under the witness. wyner: marginal total variation
  // of the best product model before certification.
  double residual = 0.0;
  bool converged = true;
  // wyner only.
  std::size_t rounds = 0;
  double final_lambda = 0.0;
  std::size_t restarts_run = 0;
  std::size_t restarts_converged = 0;
  std::size_t best_restart = 0;
  Bits model_value = 0.0;
};

struct CommonInfoResult {
  Bits value = 0.0;
  std::optional<AuxChannel> witness;
  CommonInfoMethod method = CommonInfoMethod::kGkComponents;
  CommonInfoDiagnostics diagnostics;
};

// Exact C with the deterministic component witness W*.
// Throws kKTooSmall for K < 2.
CommonInfoResult gk_common_information(const JointPmf& pmf);

// Component label of every joint outcome (zero-mass outcomes take the label
// of their X1 symbol, or 0) and the number of components.
std::pair<std::vector<std::size_t>, std::size_t> gk_component_labels(
    const JointPmf& pmf);

inline constexpr std::size_t kBruteForceMaxSupport = 8;

// Test oracle: searches every set partition of the support as a
// deterministic W. Throws kSupportTooLarge beyond kBruteForceMaxSupport.
CommonInfoResult gk_brute_force_oracle(const JointPmf& pmf);

struct WynerParams {
  // 0 selects support size + 1.
  std::size_t w_cardinality = 0;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
  double lambda_start = 1.0;
  double lambda_factor = 10.0;
  std::size_t max_rounds = 8;
  std::size_t max_iterations_per_round = 5000;
  std::size_t window = 50;
  double residual_tolerance = 1e-6;
  double objective_tolerance = 1e-9;
  std::size_t threads = 1;
};

// Upper-bound estimate of B. The constant, copy and component channels are
// evaluated as seeds in addition to `restarts` random starts. The returned
// value is I(X̄;W) of an exactly feasible witness: the best product model is
// mixed with point masses that absorb its marginal residual. Never throws on
// non-convergence; diagnostics.converged reports the residual gate.
CommonInfoResult wyner_estimate(const JointPmf& pmf, const WynerParams& params);

struct PairwiseBounds {
  Bits min_mi = 0.0;
  Bits max_mi = 0.0;
  std::pair<std::size_t, std::size_t> argmin{0, 1};
  std::pair<std::size_t, std::size_t> argmax{0, 1};
};

// Extremes of I(Xi;Xj) over i<j; ties go to the lexicographically first pair.
PairwiseBounds pairwise_mi_bounds(const JointPmf& pmf);

struct ChainLink {
  std::string name;
  Bits lhs = 0.0;
  Bits rhs = 0.0;
  double tolerance = 0.0;
  // lhs - rhs; the link holds when residual <= tolerance.
  double residual = 0.0;
  bool evaluated = true;
  bool holds = true;
};

struct BoundsReport {
  Bits c_value = 0.0;
  Bits min_pairwise_mi = 0.0;
  Bits max_pairwise_mi = 0.0;
  Bits b_estimate = 0.0;
  bool b_converged = false;
  std::vector<ChainLink> links;
  // True when every evaluated link holds.
  bool chain_holds = true;
};

BoundsReport verify_chain(const JointPmf& pmf, const WynerParams& params);

struct MonotonicityReport {
  Bits c_full = 0.0;
  Bits c_dropped = 0.0;
  std::size_t dropped = 0;
  bool holds = true;
};

// C of the full pmf against C with variable `drop` marginalized out.
// Requires K >= 3.
MonotonicityReport verify_monotonicity(const JointPmf& pmf, std::size_t drop);

enum class Prop4Status {
  kConclusionHolds,
  kConclusionViolated,
  kPreconditionNotMet,
  kHypothesisNotEstablished,
};

std::string_view Prop4StatusName(Prop4Status status);

struct Prop4Report {
  Prop4Status status = Prop4Status::kPreconditionNotMet;
  Bits c_value = 0.0;
  Bits min_pairwise_mi = 0.0;
  Bits max_pairwise_mi = 0.0;
  // Only estimated when the precondition holds.
  std::optional<Bits> b_estimate;
  bool b_converged = false;
};

// When all pairwise informations agree and B is shown to meet them, C must
// equal the common pairwise value.
Prop4Report verify_prop4(const JointPmf& pmf, const WynerParams& params);

struct C2Report {
  Bits c_value = 0.0;
  std::vector<Bits> source_entropies;
  std::vector<Bits> conditional_entropies;  // H(X_k | W*)
  Bits common_rate = 0.0;                   // I(X̄; W*)
  double max_residual = 0.0;
};

// Checks that ({H(X_k) - C}, C) meets the Gray-Wyner rate bounds with
// equality under W*. Throws kWitnessInfeasible otherwise.
C2Report verify_c2(const JointPmf& pmf);

}  // namespace gwpriv

#endif  // GWPRIV_COMMON_INFORMATION_HPP_
