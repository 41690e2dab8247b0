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
#include "gwpriv/infotheory.hpp"

#include <cmath>
#include <sstream>

#include "gwpriv/error.hpp"

namespace gwpriv {
namespace {

void CheckVars(const JointPmf& pmf, const VarSet& vars) {
  std::vector<bool> seen(pmf.num_vars(), false);
  for (std::size_t v : vars) {
    if (v >= pmf.num_vars() || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad variable index " + std::to_string(v));
    }
    seen[v] = true;
  }
}

void CheckDisjoint(const JointPmf& pmf, std::initializer_list<const VarSet*> sets) {
  std::vector<bool> seen(pmf.num_vars(), false);
  for (const VarSet* set : sets) {
    CheckVars(pmf, *set);
    for (std::size_t v : *set) {
      if (seen[v]) {
        throw Error(ErrorCode::kOverlappingSelections,
                    "variable " + std::to_string(v) + " appears twice");
      }
      seen[v] = true;
    }
  }
}

VarSet Union(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Entropy of the marginal on `vars`; the empty set has zero entropy.
double RawEntropy(const JointPmf& pmf, const VarSet& vars) {
  if (vars.empty()) return 0.0;
  std::size_t size = 1;
  std::vector<std::size_t> strides(vars.size());
  for (std::size_t a = vars.size(); a-- > 0;) {
    strides[a] = size;
    size *= pmf.cardinalities()[vars[a]];
  }
  std::vector<double> marginal(size, 0.0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double p = pmf[i];
    if (p == 0.0) continue;
    std::size_t j = 0;
    for (std::size_t a = 0; a < vars.size(); ++a) {
      j += pmf.coordinate(i, vars[a]) * strides[a];
    }
    marginal[j] += p;
  }
  return entropy_of(marginal);
}

}  // namespace

Bits clamp_measure(double value) {
  if (value >= 0.0) return value;
  if (value >= -kMeasureTolerance) return 0.0;
  std::ostringstream msg;
  msg << "information measure evaluated to " << value;
  throw Error(ErrorCode::kInternalConsistency, msg.str());
}

Bits entropy_of(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return clamp_measure(h);
}

Bits binary_entropy(double p) {
  const double q[2] = {p, 1.0 - p};
  return entropy_of(q);
}

Bits entropy(const JointPmf& pmf, const VarSet& vars) {
  if (vars.empty()) {
    throw Error(ErrorCode::kEmptySelection, "entropy needs a variable");
  }
  CheckVars(pmf, vars);
  return RawEntropy(pmf, vars);
}

Bits conditional_entropy(const JointPmf& pmf, const VarSet& of,
                         const VarSet& given) {
  if (of.empty()) {
    throw Error(ErrorCode::kEmptySelection, "conditional entropy of nothing");
  }
  CheckDisjoint(pmf, {&of, &given});
  return clamp_measure(RawEntropy(pmf, Union(of, given)) -
                       RawEntropy(pmf, given));
}

Bits mutual_information(const JointPmf& pmf, const VarSet& a, const VarSet& b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptySelection, "mutual information needs two sets");
  }
  CheckDisjoint(pmf, {&a, &b});
  return clamp_measure(RawEntropy(pmf, a) + RawEntropy(pmf, b) -
                       RawEntropy(pmf, Union(a, b)));
}

Bits conditional_mutual_information(const JointPmf& pmf, const VarSet& a,
                                    const VarSet& b, const VarSet& given) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptySelection, "mutual information needs two sets");
  }
  CheckDisjoint(pmf, {&a, &b, &given});
  const VarSet ag = Union(a, given);
  const VarSet bg = Union(b, given);
  const VarSet abg = Union(ag, b);
  return clamp_measure(RawEntropy(pmf, ag) + RawEntropy(pmf, bg) -
                       RawEntropy(pmf, abg) - RawEntropy(pmf, given));
}

Bits markov_slack(const JointPmf& pmf_with_w, std::size_t k) {
  if (pmf_with_w.num_vars() < 2) {
    throw Error(ErrorCode::kMissingAuxAxis,
                "expected sources followed by a W axis");
  }
  const std::size_t sources = pmf_with_w.num_vars() - 1;
  if (k >= sources) {
    throw Error(ErrorCode::kInvalidArgument,
                "source index " + std::to_string(k) + " out of range");
  }
  if (sources == 1) return 0.0;
  VarSet others;
  for (std::size_t v = 0; v < sources; ++v) {
    if (v != k) others.push_back(v);
  }
  return conditional_mutual_information(pmf_with_w, others, {sources}, {k});
}

Bits markov_slack(const JointPmf& pmf, const AuxChannel& w, std::size_t k) {
  return markov_slack(join_with_aux(pmf, w), k);
}

bool markov_chain_holds(const JointPmf& pmf_with_w, std::size_t k,
                        double tolerance) {
  return markov_slack(pmf_with_w, k) <= tolerance;
}

VarSet all_vars(std::size_t count) {
  VarSet out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = i;
  return out;
}

VarSet complement(const VarSet& vars, std::size_t count) {
  std::vector<bool> in(count, false);
  for (std::size_t v : vars) {
    if (v < count) in[v] = true;
  }
  VarSet out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

}  // namespace gwpriv
