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
// Alternating minimization for B.
//
// The channel r(w|x̄) on the support and a product model
// q(w) Π_k q(x_k|w) are updated in turn to decrease
//
//   (1 - β) I(X̄;W) + β D(p r || q),   β = λ / (1 + λ),
//
// with λ escalated between rounds until the model marginal matches p. The
// final model is then turned into an exactly feasible channel (see Certify).
#include <algorithm>
#include <cmath>
#include <limits>

#include "gwpriv/common_information.hpp"
#include "gwpriv/error.hpp"
#include "gwpriv/random.hpp"
#include "parallel.hpp"

namespace gwpriv {
namespace {

constexpr double kFactorFloor = 1e-10;
constexpr double kWeightFloor = 1e-12;
constexpr double kMixtureFloor = 1e-14;
constexpr double kTieTolerance = 1e-12;
constexpr std::uint64_t kRestartStream = 0x5759u;

struct Problem {
  const JointPmf* pmf = nullptr;
  std::size_t num_sources = 0;
  std::vector<std::size_t> cards;
  std::vector<std::size_t> support;  // joint indices
  std::vector<double> p;             // mass on each support outcome
  std::vector<std::size_t> coords;   // support.size() x num_sources
  std::size_t m = 0;                 // |W| of the product model

  std::size_t x(std::size_t s, std::size_t k) const {
    return coords[s * num_sources + k];
  }
};

struct Model {
  std::vector<double> qw;                 // m
  std::vector<std::vector<double>> qk;    // per k: m x card_k
};

// r is support.size() x m, row-major.
using Channel = std::vector<double>;

Problem MakeProblem(const JointPmf& pmf, std::size_t w_cardinality) {
  Problem pr;
  pr.pmf = &pmf;
  pr.num_sources = pmf.num_vars();
  pr.cards = pmf.cardinalities();
  pr.support = pmf.support();
  for (std::size_t i : pr.support) {
    pr.p.push_back(pmf[i]);
    for (std::size_t k = 0; k < pr.num_sources; ++k) {
      pr.coords.push_back(pmf.coordinate(i, k));
    }
  }
  pr.m = w_cardinality == 0 ? pr.support.size() + 1 : w_cardinality;
  return pr;
}

Model QStep(const Problem& pr, const Channel& r) {
  Model q;
  q.qw.assign(pr.m, 0.0);
  q.qk.resize(pr.num_sources);
  for (std::size_t k = 0; k < pr.num_sources; ++k) {
    q.qk[k].assign(pr.m * pr.cards[k], 0.0);
  }
  for (std::size_t s = 0; s < pr.support.size(); ++s) {
    for (std::size_t w = 0; w < pr.m; ++w) {
      const double mass = pr.p[s] * r[s * pr.m + w];
      if (mass == 0.0) continue;
      q.qw[w] += mass;
      for (std::size_t k = 0; k < pr.num_sources; ++k) {
        q.qk[k][w * pr.cards[k] + pr.x(s, k)] += mass;
      }
    }
  }
  for (std::size_t w = 0; w < pr.m; ++w) {
    for (std::size_t k = 0; k < pr.num_sources; ++k) {
      const std::size_t c = pr.cards[k];
      for (std::size_t a = 0; a < c; ++a) {
        double& v = q.qk[k][w * c + a];
        v = q.qw[w] > 0.0 ? v / q.qw[w] : 1.0 / static_cast<double>(c);
      }
    }
  }
  return q;
}

void RStep(const Problem& pr, const Model& q, double beta, Channel& r) {
  std::vector<double> logits(pr.m);
  for (std::size_t s = 0; s < pr.support.size(); ++s) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < pr.m; ++w) {
      double v = std::log(q.qw[w]);
      for (std::size_t k = 0; k < pr.num_sources && std::isfinite(v); ++k) {
        v += beta * std::log(q.qk[k][w * pr.cards[k] + pr.x(s, k)]);
      }
      logits[w] = v;
      top = std::max(top, v);
    }
    double total = 0.0;
    for (std::size_t w = 0; w < pr.m; ++w) {
      logits[w] = std::isfinite(logits[w]) ? std::exp(logits[w] - top) : 0.0;
      total += logits[w];
    }
    for (std::size_t w = 0; w < pr.m; ++w) {
      r[s * pr.m + w] = logits[w] / total;
    }
  }
}

// (1 - β) I + β D in bits, for a model produced by QStep from r.
double Objective(const Problem& pr, const Channel& r, const Model& q,
                 double beta) {
  double info = 0.0;
  double divergence = 0.0;
  for (std::size_t s = 0; s < pr.support.size(); ++s) {
    for (std::size_t w = 0; w < pr.m; ++w) {
      const double rv = r[s * pr.m + w];
      if (rv <= 0.0) continue;
      const double mass = pr.p[s] * rv;
      double log_model = std::log2(q.qw[w]);
      for (std::size_t k = 0; k < pr.num_sources; ++k) {
        log_model += std::log2(q.qk[k][w * pr.cards[k] + pr.x(s, k)]);
      }
      info += mass * std::log2(rv / q.qw[w]);
      divergence += mass * (std::log2(mass) - log_model);
    }
  }
  return (1.0 - beta) * info + beta * divergence;
}

// Model marginal on every joint outcome.
std::vector<double> ModelMarginal(const Problem& pr, const Model& q) {
  const JointPmf& pmf = *pr.pmf;
  std::vector<double> out(pmf.size(), 0.0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    for (std::size_t w = 0; w < pr.m; ++w) {
      double v = q.qw[w];
      for (std::size_t k = 0; k < pr.num_sources && v > 0.0; ++k) {
        v *= q.qk[k][w * pr.cards[k] + pmf.coordinate(i, k)];
      }
      out[i] += v;
    }
  }
  return out;
}

double TotalVariation(const JointPmf& pmf, const std::vector<double>& model) {
  double tv = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) tv += std::abs(pmf[i] - model[i]);
  return 0.5 * tv;
}

struct Candidate {
  Bits value = std::numeric_limits<double>::infinity();
  Bits model_value = 0.0;
  double residual = 1.0;
  AuxChannel witness;
  std::size_t iterations = 0;
  std::size_t rounds = 0;
  double final_lambda = 0.0;
};

Bits ModelInformation(const Problem& pr, const Model& q) {
  // I(X̄;W) under the product model itself.
  const JointPmf& pmf = *pr.pmf;
  const std::vector<double> marginal = ModelMarginal(pr, q);
  double info = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (marginal[i] <= 0.0) continue;
    for (std::size_t w = 0; w < pr.m; ++w) {
      double cond = 1.0;
      for (std::size_t k = 0; k < pr.num_sources; ++k) {
        cond *= q.qk[k][w * pr.cards[k] + pmf.coordinate(i, k)];
      }
      const double mass = q.qw[w] * cond;
      if (mass > 0.0) info += mass * std::log2(cond / marginal[i]);
    }
  }
  return std::max(0.0, info);
}

// Turns a product model into a channel whose joint with p has exactly
// product conditionals: the model, scaled by (1 - t), is topped up with one
// point-mass symbol per support outcome, where t is the smallest scale
// that keeps every top-up nonnegative.
Candidate Certify(const Problem& pr, Model q) {
  const JointPmf& pmf = *pr.pmf;
  Candidate out;
  out.residual = TotalVariation(pmf, ModelMarginal(pr, q));
  out.model_value = ModelInformation(pr, q);

  for (std::size_t k = 0; k < pr.num_sources; ++k) {
    const std::size_t c = pr.cards[k];
    for (std::size_t w = 0; w < pr.m; ++w) {
      double total = 0.0;
      for (std::size_t a = 0; a < c; ++a) {
        double& v = q.qk[k][w * c + a];
        if (v < kFactorFloor) v = 0.0;
        total += v;
      }
      for (std::size_t a = 0; a < c; ++a) q.qk[k][w * c + a] /= total;
    }
  }
  double weight = 0.0;
  for (double& v : q.qw) {
    if (v < kWeightFloor) v = 0.0;
    weight += v;
  }
  for (double& v : q.qw) v /= weight;

  const std::vector<double> model = ModelMarginal(pr, q);
  double t = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (model[i] > 0.0) t = std::max(t, 1.0 - pmf[i] / model[i]);
  }
  const bool top_up = t > kMixtureFloor;
  const std::size_t w_card = pr.m + (top_up ? pr.support.size() : 0);

  std::vector<std::vector<double>> rows(pmf.size(),
                                        std::vector<double>(w_card, 0.0));
  std::size_t rank = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    std::vector<double>& row = rows[i];
    if (pmf[i] == 0.0) {
      row[0] = 1.0;
      continue;
    }
    double total = 0.0;
    for (std::size_t w = 0; w < pr.m; ++w) {
      double v = (1.0 - t) * q.qw[w];
      for (std::size_t k = 0; k < pr.num_sources && v > 0.0; ++k) {
        v *= q.qk[k][w * pr.cards[k] + pmf.coordinate(i, k)];
      }
      row[w] = v;
      total += v;
    }
    if (top_up) {
      row[pr.m + rank] = std::max(0.0, pmf[i] - (1.0 - t) * model[i]);
      total += row[pr.m + rank];
    }
    ++rank;
    for (double& v : row) v /= total;
  }
  out.witness = AuxChannel(w_card, std::move(rows));
  out.value = mutual_information(join_with_aux(pmf, out.witness),
                                 all_vars(pr.num_sources), {pr.num_sources});
  return out;
}

Candidate FromChannel(const Problem& pr, const Channel& r) {
  return Certify(pr, QStep(pr, r));
}

Candidate Anneal(const Problem& pr, Channel r, const WynerParams& params) {
  double lambda = params.lambda_start;
  std::size_t total_iterations = 0;
  std::size_t rounds = 0;
  Model q;
  std::vector<double> history;
  for (; rounds < params.max_rounds; ++rounds) {
    const double beta = lambda / (1.0 + lambda);
    history.clear();
    for (std::size_t it = 0; it < params.max_iterations_per_round; ++it) {
      q = QStep(pr, r);
      history.push_back(Objective(pr, r, q, beta));
      ++total_iterations;
      if (history.size() > params.window &&
          std::abs(history.back() - history[history.size() - 1 - params.window]) <=
              params.objective_tolerance) {
        break;
      }
      RStep(pr, q, beta, r);
    }
    if (TotalVariation(*pr.pmf, ModelMarginal(pr, q)) <=
        params.residual_tolerance) {
      ++rounds;
      break;
    }
    if (rounds + 1 < params.max_rounds) lambda *= params.lambda_factor;
  }
  Candidate out = Certify(pr, q);
  out.iterations = total_iterations;
  out.rounds = rounds;
  out.final_lambda = lambda;
  return out;
}

Channel SeedChannel(const Problem& pr, const std::vector<std::size_t>& label) {
  Channel r(pr.support.size() * pr.m, 0.0);
  for (std::size_t s = 0; s < pr.support.size(); ++s) {
    r[s * pr.m + label[s]] = 1.0;
  }
  return r;
}

}  // namespace

CommonInfoResult wyner_estimate(const JointPmf& pmf, const WynerParams& params) {
  if (pmf.num_vars() < 2) {
    throw Error(ErrorCode::kKTooSmall, "need at least 2 sources");
  }
  if (params.max_rounds == 0 || params.window == 0 ||
      params.max_iterations_per_round == 0 || !(params.lambda_start > 0.0) ||
      !(params.lambda_factor >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "bad optimizer parameters");
  }
  const Problem pr = MakeProblem(pmf, params.w_cardinality);
  if (pr.m < pr.support.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "w_cardinality must be at least the support size");
  }

  // Seeds: constant, component labels, copy of the outcome.
  const auto [gk_labels, gk_count] = gk_component_labels(pmf);
  std::vector<std::vector<std::size_t>> seeds(3);
  for (std::size_t s = 0; s < pr.support.size(); ++s) {
    seeds[0].push_back(0);
    seeds[1].push_back(gk_labels[pr.support[s]]);
    seeds[2].push_back(s);
  }

  const std::size_t total = seeds.size() + params.restarts;
  std::vector<Candidate> candidates(total);
  internal::parallel_for(total, params.threads, [&](std::size_t index) {
    if (index < seeds.size()) {
      candidates[index] = FromChannel(pr, SeedChannel(pr, seeds[index]));
      return;
    }
    Rng rng(derive_seed(params.seed, kRestartStream, index - seeds.size()));
    Channel r;
    r.reserve(pr.support.size() * pr.m);
    for (std::size_t s = 0; s < pr.support.size(); ++s) {
      const std::vector<double> row = uniform_simplex(rng, pr.m);
      r.insert(r.end(), row.begin(), row.end());
    }
    candidates[index] = Anneal(pr, std::move(r), params);
  });

  auto gated = [&](const Candidate& c) {
    return c.residual <= params.residual_tolerance;
  };
  std::size_t best = 0;
  std::size_t converged = 0;
  for (std::size_t i = 0; i < total; ++i) {
    if (gated(candidates[i])) ++converged;
    if (i == 0) continue;
    const Candidate& a = candidates[i];
    const Candidate& b = candidates[best];
    if (gated(a) != gated(b)) {
      if (gated(a)) best = i;
    } else if (a.value < b.value - kTieTolerance) {
      best = i;
    }
  }

  Candidate& chosen = candidates[best];
  CommonInfoResult result;
  result.method = CommonInfoMethod::kWynerAltMin;
  result.value = chosen.value;
  result.witness = std::move(chosen.witness);
  result.diagnostics.iterations = chosen.iterations;
  result.diagnostics.residual = chosen.residual;
  result.diagnostics.converged = gated(chosen);
  result.diagnostics.rounds = chosen.rounds;
  result.diagnostics.final_lambda = chosen.final_lambda;
  result.diagnostics.restarts_run = total;
  result.diagnostics.restarts_converged = converged;
  result.diagnostics.best_restart = best;
  result.diagnostics.model_value = chosen.model_value;
  return result;
}

}  // namespace gwpriv
