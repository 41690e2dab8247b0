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
#include "gwpriv/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gwpriv/common_information.hpp"
#include "gwpriv/error.hpp"
#include "gwpriv/random.hpp"
#include "parallel.hpp"

namespace gwpriv {
namespace {

constexpr double kConvergedTolerance = 1e-6;
constexpr double kInnerTolerance = 1e-10;
constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEpsilon = 1e-8;
constexpr std::size_t kPenaltyPhases = 5;
constexpr std::uint64_t kDeltaStream = 0x44656c74u;
constexpr std::uint64_t kMemberStream = 0x4d656d62u;

void CheckTuple(const JointPmf& pmf, const RateEquivocationTuple& t) {
  if (t.rk.size() != pmf.num_vars()) {
    throw Error(ErrorCode::kShapeMismatch,
                "tuple has " + std::to_string(t.rk.size()) +
                    " private rates for " + std::to_string(pmf.num_vars()) +
                    " sources");
  }
  bool negative = t.r0 < -kRegionTolerance || t.delta < -kRegionTolerance;
  for (Bits r : t.rk) negative = negative || r < -kRegionTolerance;
  if (negative) {
    throw Error(ErrorCode::kInvalidArgument, "tuple has a negative component");
  }
}

// Softmax-parameterized channel on the support with the information
// quantities of the search and their gradients with respect to the joint
// cells P(s, w) = p(s) r(w|s).
class ChannelState {
 public:
  ChannelState(const JointPmf& pmf, std::size_t m)
      : pmf_(pmf), num_sources_(pmf.num_vars()), m_(m), support_(pmf.support()) {
    for (std::size_t i : support_) p_.push_back(pmf[i]);
    h_sources_ = entropy_of(p_);
  }

  std::size_t num_cells() const { return support_.size() * m_; }
  std::size_t m() const { return m_; }

  void SetLogits(const std::vector<double>& theta) {
    theta_ = theta;
    r_.assign(num_cells(), 0.0);
    for (std::size_t s = 0; s < support_.size(); ++s) {
      const double* row = &theta_[s * m_];
      const double top = *std::max_element(row, row + m_);
      double total = 0.0;
      for (std::size_t w = 0; w < m_; ++w) {
        r_[s * m_ + w] = std::exp(row[w] - top);
        total += r_[s * m_ + w];
      }
      for (std::size_t w = 0; w < m_; ++w) r_[s * m_ + w] /= total;
    }
    Evaluate();
  }

  const std::vector<double>& theta() const { return theta_; }
  Bits info() const { return info_; }
  Bits delta() const { return delta_; }
  Bits private_rate(std::size_t k) const { return h_kw_[k] - h_w_; }
  Bits private_sum() const {
    Bits total = 0.0;
    for (std::size_t k = 0; k < num_sources_; ++k) total += private_rate(k);
    return total;
  }

  // d I(X̄;W) / d P(s,w).
  double GradInfo(std::size_t s, std::size_t w) const {
    const double cell = p_[s] * r_[s * m_ + w];
    if (cell <= 0.0) return 0.0;
    return std::log2(cell) - std::log2(qw_[w]);
  }
  // d Δ / d P(s,w), with Δ = K H(X̄,W) - Σ_k H(X_k,W).
  double GradDelta(std::size_t s, std::size_t w) const {
    const double cell = p_[s] * r_[s * m_ + w];
    if (cell <= 0.0) return 0.0;
    double g = -static_cast<double>(num_sources_) * std::log2(cell);
    for (std::size_t k = 0; k < num_sources_; ++k) {
      g += std::log2(pkw_[k][Cell(s, k, w)]);
    }
    return g;
  }
  // d H(X_k|W) / d P(s,w).
  double GradPrivate(std::size_t s, std::size_t k, std::size_t w) const {
    const double cell = p_[s] * r_[s * m_ + w];
    if (cell <= 0.0) return 0.0;
    return std::log2(qw_[w]) - std::log2(pkw_[k][Cell(s, k, w)]);
  }

  // Chain rule through P = p r and the row softmax, for a cell gradient g.
  template <typename CellGrad>
  void LogitGradient(CellGrad g, std::vector<double>& out) const {
    out.assign(num_cells(), 0.0);
    std::vector<double> row(m_);
    for (std::size_t s = 0; s < support_.size(); ++s) {
      double mean = 0.0;
      for (std::size_t w = 0; w < m_; ++w) {
        row[w] = g(s, w);
        mean += r_[s * m_ + w] * row[w];
      }
      for (std::size_t w = 0; w < m_; ++w) {
        out[s * m_ + w] = p_[s] * r_[s * m_ + w] * (row[w] - mean);
      }
    }
  }

  AuxChannel Witness() const {
    std::vector<std::vector<double>> rows(pmf_.size(),
                                          std::vector<double>(m_, 0.0));
    for (auto& row : rows) row[0] = 1.0;
    for (std::size_t s = 0; s < support_.size(); ++s) {
      rows[support_[s]].assign(r_.begin() + s * m_, r_.begin() + (s + 1) * m_);
    }
    return AuxChannel(m_, std::move(rows));
  }

 private:
  std::size_t Cell(std::size_t s, std::size_t k, std::size_t w) const {
    return pmf_.coordinate(support_[s], k) * m_ + w;
  }

  void Evaluate() {
    qw_.assign(m_, 0.0);
    pkw_.assign(num_sources_, {});
    for (std::size_t k = 0; k < num_sources_; ++k) {
      pkw_[k].assign(pmf_.cardinalities()[k] * m_, 0.0);
    }
    double h_joint = 0.0;
    for (std::size_t s = 0; s < support_.size(); ++s) {
      for (std::size_t w = 0; w < m_; ++w) {
        const double cell = p_[s] * r_[s * m_ + w];
        if (cell <= 0.0) continue;
        h_joint -= cell * std::log2(cell);
        qw_[w] += cell;
        for (std::size_t k = 0; k < num_sources_; ++k) {
          pkw_[k][Cell(s, k, w)] += cell;
        }
      }
    }
    h_w_ = entropy_of(qw_);
    h_kw_.assign(num_sources_, 0.0);
    double sum_kw = 0.0;
    for (std::size_t k = 0; k < num_sources_; ++k) {
      h_kw_[k] = entropy_of(pkw_[k]);
      sum_kw += h_kw_[k];
    }
    info_ = std::max(0.0, h_sources_ + h_w_ - h_joint);
    delta_ = std::max(0.0, static_cast<double>(num_sources_) * h_joint - sum_kw);
  }

  const JointPmf& pmf_;
  std::size_t num_sources_;
  std::size_t m_;
  std::vector<std::size_t> support_;
  std::vector<double> p_;
  double h_sources_ = 0.0;
  std::vector<double> theta_;
  std::vector<double> r_;
  std::vector<double> qw_;
  std::vector<std::vector<double>> pkw_;
  double h_w_ = 0.0;
  std::vector<double> h_kw_;
  Bits info_ = 0.0;
  Bits delta_ = 0.0;
};

class Adam {
 public:
  Adam(std::size_t size, double rate)
      : rate_(rate), m_(size, 0.0), v_(size, 0.0) {}

  // Moves theta against the gradient.
  void Descend(const std::vector<double>& grad, std::vector<double>& theta) {
    ++step_;
    const double c1 = 1.0 - std::pow(kAdamBeta1, static_cast<double>(step_));
    const double c2 = 1.0 - std::pow(kAdamBeta2, static_cast<double>(step_));
    for (std::size_t i = 0; i < theta.size(); ++i) {
      m_[i] = kAdamBeta1 * m_[i] + (1.0 - kAdamBeta1) * grad[i];
      v_[i] = kAdamBeta2 * v_[i] + (1.0 - kAdamBeta2) * grad[i] * grad[i];
      theta[i] -= rate_ * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + kAdamEpsilon);
    }
  }

 private:
  double rate_;
  std::size_t step_ = 0;
  std::vector<double> m_;
  std::vector<double> v_;
};

std::size_t SearchCardinality(const JointPmf& pmf, const SearchParams& params) {
  return params.w_cardinality == 0 ? pmf.support_size() + 1
                                   : params.w_cardinality;
}

std::vector<double> RandomLogits(std::size_t rows, std::size_t m, Rng& rng) {
  std::vector<double> theta;
  theta.reserve(rows * m);
  for (std::size_t s = 0; s < rows; ++s) {
    for (double v : uniform_simplex(rng, m)) {
      theta.push_back(std::log(std::max(v, 1e-300)));
    }
  }
  return theta;
}

// Deterministic channels that are always tried: constant, component labels
// and copy of the outcome. Seeds that need more than m symbols are skipped.
std::vector<AuxChannel> SeedChannels(const JointPmf& pmf, std::size_t m) {
  std::vector<AuxChannel> seeds;
  seeds.push_back(AuxChannel::Deterministic(
      std::vector<std::size_t>(pmf.size(), 0), m));
  const auto [labels, count] = gk_component_labels(pmf);
  if (count <= m) seeds.push_back(AuxChannel::Deterministic(labels, m));
  const std::vector<std::size_t> support = pmf.support();
  if (support.size() <= m) {
    std::vector<std::size_t> copy(pmf.size(), 0);
    for (std::size_t s = 0; s < support.size(); ++s) copy[support[s]] = s;
    seeds.push_back(AuxChannel::Deterministic(copy, m));
  }
  return seeds;
}

struct DeltaCandidate {
  bool feasible = false;
  Bits delta = 0.0;
  Bits private_sum = 0.0;
  AuxChannel witness;
};

DeltaCandidate CertifyDelta(const JointPmf& pmf, AuxChannel w, Bits budget) {
  DeltaCandidate out;
  const RateEquivocationTuple corner = corner_point(pmf, w);
  out.feasible = corner.r0 <= budget + kRegionTolerance;
  out.delta = corner.delta;
  for (Bits r : corner.rk) out.private_sum += r;
  out.witness = std::move(w);
  return out;
}

// a beats b: more Δ, then (within tolerance) smaller Σ_k H(X_k|W).
bool Better(Bits delta_a, Bits sum_a, Bits delta_b, Bits sum_b) {
  if (delta_a > delta_b + kRegionTolerance) return true;
  if (delta_a < delta_b - kRegionTolerance) return false;
  return sum_a < sum_b - kRegionTolerance;
}

DeltaCandidate SearchDelta(const JointPmf& pmf, Bits budget, std::size_t m,
                           const SearchParams& params, std::uint64_t seed) {
  Rng rng(seed);
  ChannelState state(pmf, m);
  std::vector<double> theta = RandomLogits(pmf.support_size(), m, rng);
  state.SetLogits(theta);
  Adam adam(theta.size(), params.learning_rate);

  bool have_best = false;
  Bits best_delta = 0.0;
  Bits best_sum = 0.0;
  std::vector<double> best_theta;
  std::vector<double> grad;
  const std::size_t phase_length =
      std::max<std::size_t>(1, params.iterations / kPenaltyPhases);
  for (std::size_t it = 0; it <= params.iterations; ++it) {
    if (state.info() <= budget) {
      const Bits sum = state.private_sum();
      if (!have_best || Better(state.delta(), sum, best_delta, best_sum)) {
        have_best = true;
        best_delta = state.delta();
        best_sum = sum;
        best_theta = state.theta();
      }
    }
    if (it == params.iterations) break;
    const double mu = std::pow(10.0, static_cast<double>(it / phase_length));
    const double excess = std::max(0.0, state.info() - budget);
    // Minimize -Δ + μ (I - budget)_+^2.
    state.LogitGradient(
        [&](std::size_t s, std::size_t w) {
          return -state.GradDelta(s, w) + 2.0 * mu * excess * state.GradInfo(s, w);
        },
        grad);
    adam.Descend(grad, theta);
    state.SetLogits(theta);
  }
  if (!have_best) return {};
  state.SetLogits(best_theta);
  return CertifyDelta(pmf, state.Witness(), budget);
}

// Largest violation of t by the channel's corner point (0 when inside).
double Violation(const ChannelState& state, const RateEquivocationTuple& t) {
  double worst = std::max({0.0, state.info() - t.r0, t.delta - state.delta()});
  for (std::size_t k = 0; k < t.rk.size(); ++k) {
    worst = std::max(worst, state.private_rate(k) - t.rk[k]);
  }
  return worst;
}

std::optional<AuxChannel> SearchMember(const JointPmf& pmf,
                                       const RateEquivocationTuple& t,
                                       std::size_t m, const SearchParams& params,
                                       std::uint64_t seed) {
  Rng rng(seed);
  ChannelState state(pmf, m);
  std::vector<double> theta = RandomLogits(pmf.support_size(), m, rng);
  state.SetLogits(theta);
  Adam adam(theta.size(), params.learning_rate);
  std::vector<double> grad;
  for (std::size_t it = 0; it < params.iterations; ++it) {
    if (Violation(state, t) <= kInnerTolerance) break;
    const double over_r0 = std::max(0.0, state.info() - t.r0);
    const double under_delta = std::max(0.0, t.delta - state.delta());
    std::vector<double> over_rk(t.rk.size());
    for (std::size_t k = 0; k < t.rk.size(); ++k) {
      over_rk[k] = std::max(0.0, state.private_rate(k) - t.rk[k]);
    }
    // Minimize the sum of squared violations.
    state.LogitGradient(
        [&](std::size_t s, std::size_t w) {
          double g = 2.0 * over_r0 * state.GradInfo(s, w) -
                     2.0 * under_delta * state.GradDelta(s, w);
          for (std::size_t k = 0; k < over_rk.size(); ++k) {
            if (over_rk[k] > 0.0) {
              g += 2.0 * over_rk[k] * state.GradPrivate(s, k, w);
            }
          }
          return g;
        },
        grad);
    adam.Descend(grad, theta);
    state.SetLogits(theta);
  }
  AuxChannel witness = state.Witness();
  if (is_achievable_with(pmf, witness, t)) return witness;
  return std::nullopt;
}

}  // namespace

RateEquivocationTuple corner_point(const JointPmf& pmf, const AuxChannel& w) {
  const JointPmf joined = join_with_aux(pmf, w);
  const std::size_t num_sources = pmf.num_vars();
  const VarSet sources = all_vars(num_sources);
  const VarSet aux = {num_sources};
  RateEquivocationTuple t;
  t.r0 = mutual_information(joined, sources, aux);
  for (std::size_t k = 0; k < num_sources; ++k) {
    t.rk.push_back(conditional_entropy(joined, {k}, aux));
    // H(X̄|W,X_k) = H(X̄∖X_k|W,X_k).
    const VarSet others = complement({k}, num_sources);
    if (others.empty()) continue;
    t.delta += conditional_entropy(joined, others, {num_sources, k});
  }
  return t;
}

Bits delta_max(const JointPmf& pmf) {
  if (pmf.num_vars() < 2) {
    throw Error(ErrorCode::kKTooSmall, "need at least 2 sources");
  }
  Bits total = 0.0;
  for (std::size_t k = 0; k < pmf.num_vars(); ++k) {
    total += conditional_entropy(pmf, complement({k}, pmf.num_vars()), {k});
  }
  return total;
}

bool is_achievable_with(const JointPmf& pmf, const AuxChannel& w,
                        const RateEquivocationTuple& t) {
  CheckTuple(pmf, t);
  const RateEquivocationTuple corner = corner_point(pmf, w);
  if (t.r0 < corner.r0 - kRegionTolerance) return false;
  for (std::size_t k = 0; k < corner.rk.size(); ++k) {
    if (t.rk[k] < corner.rk[k] - kRegionTolerance) return false;
  }
  return t.delta <= corner.delta + kRegionTolerance;
}

DeltaSearchResult max_delta_at_r0(const JointPmf& pmf, Bits r0_budget,
                                  const SearchParams& params) {
  if (pmf.num_vars() < 2) {
    throw Error(ErrorCode::kKTooSmall, "need at least 2 sources");
  }
  if (!(r0_budget >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "r0 budget must be nonnegative");
  }
  const std::size_t m = SearchCardinality(pmf, params);
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "w_cardinality is 0");

  const std::vector<AuxChannel> seeds = SeedChannels(pmf, m);
  const std::size_t total = seeds.size() + params.restarts;
  std::vector<DeltaCandidate> candidates(total);
  internal::parallel_for(total, params.threads, [&](std::size_t index) {
    if (index < seeds.size()) {
      candidates[index] = CertifyDelta(pmf, seeds[index], r0_budget);
    } else {
      candidates[index] = SearchDelta(
          pmf, r0_budget, m, params,
          derive_seed(params.seed, kDeltaStream, index - seeds.size()));
    }
  });

  // The constant seed has zero rate, so some candidate is always feasible.
  std::size_t best = 0;
  for (std::size_t i = 1; i < total; ++i) {
    const DeltaCandidate& a = candidates[i];
    const DeltaCandidate& b = candidates[best];
    if (a.feasible && Better(a.delta, a.private_sum, b.delta, b.private_sum)) {
      best = i;
    }
  }
  DeltaSearchResult result;
  result.delta = candidates[best].delta;
  result.witness = std::move(candidates[best].witness);
  result.corner = corner_point(pmf, result.witness);
  result.converged =
      std::abs(result.delta - delta_max(pmf)) <= kConvergedTolerance;
  result.best_restart = best;
  return result;
}

std::vector<SweepPoint> sweep_delta(const JointPmf& pmf,
                                    const std::vector<Bits>& r0_grid,
                                    const SearchParams& params) {
  std::vector<SweepPoint> out;
  out.reserve(r0_grid.size());
  for (Bits budget : r0_grid) {
    out.push_back({budget, max_delta_at_r0(pmf, budget, params)});
  }
  return out;
}

AchievabilityVerdict is_achievable(const JointPmf& pmf,
                                   const RateEquivocationTuple& t,
                                   const SearchParams& params) {
  if (pmf.num_vars() < 2) {
    throw Error(ErrorCode::kKTooSmall, "need at least 2 sources");
  }
  CheckTuple(pmf, t);
  const std::size_t m = SearchCardinality(pmf, params);
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "w_cardinality is 0");

  for (AuxChannel& seed : SeedChannels(pmf, m)) {
    if (is_achievable_with(pmf, seed, t)) return {true, std::move(seed)};
  }
  std::vector<std::optional<AuxChannel>> found(params.restarts);
  internal::parallel_for(params.restarts, params.threads, [&](std::size_t i) {
    found[i] = SearchMember(pmf, t, m, params,
                            derive_seed(params.seed, kMemberStream, i));
  });
  for (auto& w : found) {
    if (w) return {true, std::move(*w)};
  }
  return {false, std::nullopt};
}

}  // namespace gwpriv
