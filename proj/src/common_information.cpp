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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gwpriv/error.hpp"

namespace gwpriv {
namespace {

constexpr double kOracleSlackTolerance = 1e-12;
constexpr double kChainTolerance = 1e-6;
constexpr double kProp4HypothesisTolerance = 1e-3;

void RequireMultipleSources(const JointPmf& pmf, std::size_t minimum = 2) {
  if (pmf.num_vars() < minimum) {
    throw Error(ErrorCode::kKTooSmall,
                "need at least " + std::to_string(minimum) + " sources, got " +
                    std::to_string(pmf.num_vars()));
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

Bits LabelEntropy(const JointPmf& pmf, const std::vector<std::size_t>& labels,
                  std::size_t count) {
  std::vector<double> mass(count, 0.0);
  for (std::size_t i = 0; i < pmf.size(); ++i) mass[labels[i]] += pmf[i];
  return entropy_of(mass);
}

double MaxSlack(const JointPmf& pmf, const AuxChannel& w) {
  const JointPmf joined = join_with_aux(pmf, w);
  double worst = 0.0;
  for (std::size_t k = 0; k < pmf.num_vars(); ++k) {
    worst = std::max(worst, markov_slack(joined, k));
  }
  return worst;
}

}  // namespace

std::string_view MethodName(CommonInfoMethod method) {
  switch (method) {
    case CommonInfoMethod::kGkComponents: return "gk_components";
    case CommonInfoMethod::kBruteForce: return "brute_force";
    case CommonInfoMethod::kWynerAltMin: return "wyner_alt_min";
    case CommonInfoMethod::kPairwiseBound: return "pairwise_bound";
  }
  return "unknown";
}

std::pair<std::vector<std::size_t>, std::size_t> gk_component_labels(
    const JointPmf& pmf) {
  const std::size_t num_vars = pmf.num_vars();
  std::vector<std::size_t> offset(num_vars + 1, 0);
  for (std::size_t v = 0; v < num_vars; ++v) {
    offset[v + 1] = offset[v] + pmf.cardinalities()[v];
  }
  // One node per (variable, symbol); every positive outcome links its symbols.
  DisjointSets sets(offset[num_vars]);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] == 0.0) continue;
    const std::size_t first = offset[0] + pmf.coordinate(i, 0);
    for (std::size_t v = 1; v < num_vars; ++v) {
      sets.Union(first, offset[v] + pmf.coordinate(i, v));
    }
  }
  constexpr std::size_t kUnlabeled = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_label(offset[num_vars], kUnlabeled);
  std::vector<std::size_t> labels(pmf.size(), 0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] == 0.0) continue;
    const std::size_t root = sets.Find(offset[0] + pmf.coordinate(i, 0));
    if (root_label[root] == kUnlabeled) root_label[root] = count++;
    labels[i] = root_label[root];
  }
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] != 0.0) continue;
    const std::size_t label =
        root_label[sets.Find(offset[0] + pmf.coordinate(i, 0))];
    labels[i] = label == kUnlabeled ? 0 : label;
  }
  return {std::move(labels), count};
}

CommonInfoResult gk_common_information(const JointPmf& pmf) {
  RequireMultipleSources(pmf);
  auto [labels, count] = gk_component_labels(pmf);
  AuxChannel witness = AuxChannel::Deterministic(labels, count);

  CommonInfoResult result;
  result.method = CommonInfoMethod::kGkComponents;
  result.value = LabelEntropy(pmf, labels, count);
  result.diagnostics.residual = MaxSlack(pmf, witness);
  result.diagnostics.converged = result.diagnostics.residual <= kMarkovTolerance;
  result.witness = std::move(witness);
  return result;
}

CommonInfoResult gk_brute_force_oracle(const JointPmf& pmf) {
  RequireMultipleSources(pmf);
  const std::vector<std::size_t> support = pmf.support();
  if (support.size() > kBruteForceMaxSupport) {
    throw Error(ErrorCode::kSupportTooLarge,
                "support of " + std::to_string(support.size()) +
                    " outcomes exceeds " + std::to_string(kBruteForceMaxSupport));
  }
  const std::size_t s = support.size();

  CommonInfoResult best;
  best.method = CommonInfoMethod::kBruteForce;
  best.value = -1.0;

  // Restricted growth strings enumerate every set partition exactly once.
  std::vector<std::size_t> block(s, 0);
  std::vector<std::size_t> prefix_max(s, 0);
  std::size_t visited = 0;
  while (true) {
    const std::size_t blocks = s == 0 ? 1 : prefix_max[s - 1] + 1;
    std::vector<std::size_t> labels(pmf.size(), 0);
    for (std::size_t a = 0; a < s; ++a) labels[support[a]] = block[a];
    AuxChannel w = AuxChannel::Deterministic(labels, blocks);
    ++visited;
    if (MaxSlack(pmf, w) <= kOracleSlackTolerance) {
      const Bits value = LabelEntropy(pmf, labels, blocks);
      if (value > best.value) {
        best.value = value;
        best.witness = std::move(w);
      }
    }
    // Next restricted growth string.
    std::size_t pos = s;
    while (pos-- > 1) {
      if (block[pos] <= prefix_max[pos - 1]) break;
    }
    if (pos == 0 || pos >= s) break;
    ++block[pos];
    prefix_max[pos] = std::max(prefix_max[pos - 1], block[pos]);
    for (std::size_t a = pos + 1; a < s; ++a) {
      block[a] = 0;
      prefix_max[a] = prefix_max[pos];
    }
  }
  best.diagnostics.iterations = visited;
  best.diagnostics.residual = MaxSlack(pmf, *best.witness);
  return best;
}

PairwiseBounds pairwise_mi_bounds(const JointPmf& pmf) {
  RequireMultipleSources(pmf);
  PairwiseBounds out;
  bool first = true;
  for (std::size_t i = 0; i < pmf.num_vars(); ++i) {
    for (std::size_t j = i + 1; j < pmf.num_vars(); ++j) {
      const Bits mi = mutual_information(pmf, {i}, {j});
      if (first || mi < out.min_mi) {
        out.min_mi = mi;
        out.argmin = {i, j};
      }
      if (first || mi > out.max_mi) {
        out.max_mi = mi;
        out.argmax = {i, j};
      }
      first = false;
    }
  }
  return out;
}

BoundsReport verify_chain(const JointPmf& pmf, const WynerParams& params) {
  RequireMultipleSources(pmf);
  BoundsReport report;
  report.c_value = gk_common_information(pmf).value;
  const PairwiseBounds bounds = pairwise_mi_bounds(pmf);
  report.min_pairwise_mi = bounds.min_mi;
  report.max_pairwise_mi = bounds.max_mi;
  const CommonInfoResult b = wyner_estimate(pmf, params);
  report.b_estimate = b.value;
  report.b_converged = b.diagnostics.converged;

  auto link = [](std::string name, Bits lhs, Bits rhs, double tol,
                 bool evaluated) {
    ChainLink out;
    out.name = std::move(name);
    out.lhs = lhs;
    out.rhs = rhs;
    out.tolerance = tol;
    out.residual = lhs - rhs;
    out.evaluated = evaluated;
    out.holds = !evaluated || out.residual <= tol;
    return out;
  };
  report.links.push_back(link("C <= min_pairwise_mi", report.c_value,
                              report.min_pairwise_mi, kChainTolerance, true));
  report.links.push_back(link("min_pairwise_mi <= max_pairwise_mi",
                              report.min_pairwise_mi, report.max_pairwise_mi,
                              kMeasureTolerance, true));
  // An unconverged B estimate is reported, never scored.
  report.links.push_back(link("max_pairwise_mi <= B", report.max_pairwise_mi,
                              report.b_estimate, kChainTolerance,
                              report.b_converged));
  report.chain_holds = std::all_of(report.links.begin(), report.links.end(),
                                   [](const ChainLink& l) { return l.holds; });
  return report;
}

MonotonicityReport verify_monotonicity(const JointPmf& pmf, std::size_t drop) {
  RequireMultipleSources(pmf, 3);
  if (drop >= pmf.num_vars()) {
    throw Error(ErrorCode::kInvalidArgument, "drop index out of range");
  }
  MonotonicityReport report;
  report.dropped = drop;
  report.c_full = gk_common_information(pmf).value;
  report.c_dropped =
      gk_common_information(marginalize(pmf, complement({drop}, pmf.num_vars())))
          .value;
  report.holds = report.c_full <= report.c_dropped + kMeasureTolerance;
  return report;
}

std::string_view Prop4StatusName(Prop4Status status) {
  switch (status) {
    case Prop4Status::kConclusionHolds: return "conclusion holds";
    case Prop4Status::kConclusionViolated: return "conclusion violated";
    case Prop4Status::kPreconditionNotMet: return "precondition not met";
    case Prop4Status::kHypothesisNotEstablished:
      return "hypothesis not established";
  }
  return "unknown";
}

Prop4Report verify_prop4(const JointPmf& pmf, const WynerParams& params) {
  RequireMultipleSources(pmf);
  Prop4Report report;
  const PairwiseBounds bounds = pairwise_mi_bounds(pmf);
  report.min_pairwise_mi = bounds.min_mi;
  report.max_pairwise_mi = bounds.max_mi;
  report.c_value = gk_common_information(pmf).value;
  if (bounds.max_mi - bounds.min_mi > kChainTolerance) {
    report.status = Prop4Status::kPreconditionNotMet;
    return report;
  }
  const CommonInfoResult b = wyner_estimate(pmf, params);
  report.b_estimate = b.value;
  report.b_converged = b.diagnostics.converged;
  if (!b.diagnostics.converged ||
      std::abs(b.value - bounds.max_mi) > kProp4HypothesisTolerance) {
    report.status = Prop4Status::kHypothesisNotEstablished;
    return report;
  }
  report.status = std::abs(report.c_value - bounds.min_mi) <= kChainTolerance
                      ? Prop4Status::kConclusionHolds
                      : Prop4Status::kConclusionViolated;
  return report;
}

C2Report verify_c2(const JointPmf& pmf) {
  RequireMultipleSources(pmf);
  const CommonInfoResult c = gk_common_information(pmf);
  const JointPmf joined = join_with_aux(pmf, *c.witness);
  const std::size_t num_sources = pmf.num_vars();
  const VarSet sources = all_vars(num_sources);
  const VarSet w = {num_sources};

  C2Report report;
  report.c_value = c.value;
  report.common_rate = mutual_information(joined, sources, w);
  report.max_residual = std::abs(report.common_rate - c.value);
  for (std::size_t k = 0; k < num_sources; ++k) {
    const Bits hk = entropy(joined, {k});
    const Bits hk_given_w = conditional_entropy(joined, {k}, w);
    report.source_entropies.push_back(hk);
    report.conditional_entropies.push_back(hk_given_w);
    report.max_residual =
        std::max(report.max_residual, std::abs(hk - c.value - hk_given_w));
  }
  if (report.max_residual > kMeasureTolerance) {
    throw Error(ErrorCode::kWitnessInfeasible,
                "rate bounds miss equality by " +
                    std::to_string(report.max_residual));
  }
  return report;
}

}  // namespace gwpriv
