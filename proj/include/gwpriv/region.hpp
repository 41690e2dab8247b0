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
// Rate-equivocation region of the Gray-Wyner network with per-decoder
// equivocation. For a fixed auxiliary W the achievable tuples are
//
//   R0  >= I(X̄;W)
//   Rk  >= H(X_k|W)
//   Δ   <= Σ_k H(X̄|W,X_k)
//
// and the region is the union over W. Membership is certified one-sided: a
// witness W proves a tuple achievable, the absence of one proves nothing.
#ifndef GWPRIV_REGION_HPP_
#define GWPRIV_REGION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gwpriv/distributions.hpp"
#include "gwpriv/infotheory.hpp"

namespace gwpriv {

struct RateEquivocationTuple {
  Bits r0 = 0.0;
  std::vector<Bits> rk;
  Bits delta = 0.0;
};

inline constexpr double kRegionTolerance = 1e-9;

RateEquivocationTuple corner_point(const JointPmf& pmf, const AuxChannel& w);

// Σ_k H(X̄|X_k). Requires K >= 2.
Bits delta_max(const JointPmf& pmf);

bool is_achievable_with(const JointPmf& pmf, const AuxChannel& w,
                        const RateEquivocationTuple& t);

struct SearchParams {
  // 0 selects support size + 1.
  std::size_t w_cardinality = 0;
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  std::size_t iterations = 1500;
  double learning_rate = 0.05;
  std::size_t threads = 1;
};

struct DeltaSearchResult {
  Bits delta = 0.0;
  AuxChannel witness;
  // corner_point(pmf, witness).
  RateEquivocationTuple corner;
  // Δ reached the Δ_max upper bound, so the point is optimal.
  bool converged = false;
  std::size_t best_restart = 0;
};

// Maximizes Σ_k H(X̄|W,X_k) over W with I(X̄;W) <= r0_budget. Among witnesses
// with equal Δ the one with the smallest Σ_k H(X_k|W) wins, then the lowest
// restart index. The constant, component and copy channels are always tried.
DeltaSearchResult max_delta_at_r0(const JointPmf& pmf, Bits r0_budget,
                                  const SearchParams& params);

struct SweepPoint {
  Bits r0_budget = 0.0;
  DeltaSearchResult result;
};

std::vector<SweepPoint> sweep_delta(const JointPmf& pmf,
                                    const std::vector<Bits>& r0_grid,
                                    const SearchParams& params);

struct AchievabilityVerdict {
  bool achievable = false;
  std::optional<AuxChannel> witness;
};

// Achievable only with a certifying witness; otherwise Unknown
// (achievable == false).
AchievabilityVerdict is_achievable(const JointPmf& pmf,
                                   const RateEquivocationTuple& t,
                                   const SearchParams& params);

}  // namespace gwpriv

#endif  // GWPRIV_REGION_HPP_
