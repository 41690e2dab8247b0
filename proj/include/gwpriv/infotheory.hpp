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
// Shannon measures in bits over JointPmf values.
#ifndef GWPRIV_INFOTHEORY_HPP_
#define GWPRIV_INFOTHEORY_HPP_

#include <cstddef>
#include <span>

#include "gwpriv/distributions.hpp"

namespace gwpriv {

// Bits per symbol, log base 2.
using Bits = double;

inline constexpr double kMeasureTolerance = 1e-9;
inline constexpr double kMarkovTolerance = 1e-9;

// Clamps values in [-kMeasureTolerance, 0) to 0; anything more negative means
// the computation is broken and raises kInternalConsistency.
Bits clamp_measure(double value);

// -Σ p log2 p over a probability vector, 0 log 0 = 0.
Bits entropy_of(std::span<const double> probabilities);

// Binary entropy h(p).
Bits binary_entropy(double p);

Bits entropy(const JointPmf& pmf, const VarSet& vars);
Bits conditional_entropy(const JointPmf& pmf, const VarSet& of,
                         const VarSet& given);
Bits mutual_information(const JointPmf& pmf, const VarSet& a, const VarSet& b);
Bits conditional_mutual_information(const JointPmf& pmf, const VarSet& a,
                                    const VarSet& b, const VarSet& given);

// I(X̄∖X_k ; W | X_k) for a pmf whose last variable is W (as produced by
// join_with_aux). Throws kMissingAuxAxis when there is no W axis to speak of.
Bits markov_slack(const JointPmf& pmf_with_w, std::size_t k);
Bits markov_slack(const JointPmf& pmf, const AuxChannel& w, std::size_t k);

// True iff markov_slack(k) <= tolerance.
bool markov_chain_holds(const JointPmf& pmf_with_w, std::size_t k,
                        double tolerance = kMarkovTolerance);

// 0..count-1 and the complement of `vars` in 0..count-1.
VarSet all_vars(std::size_t count);
VarSet complement(const VarSet& vars, std::size_t count);

}  // namespace gwpriv

#endif  // GWPRIV_INFOTHEORY_HPP_
