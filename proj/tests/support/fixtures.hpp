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
// Sources shared by the unit and acceptance tests.
#ifndef GWPRIV_TESTS_SUPPORT_FIXTURES_HPP_
#define GWPRIV_TESTS_SUPPORT_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gwpriv/distributions.hpp"
#include "gwpriv/error.hpp"
#include "gwpriv/random.hpp"

namespace gwpriv::testing {

// Code of the Error thrown by fn, or nullopt when nothing is thrown.
inline std::optional<ErrorCode> CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// X1 a fair bit, X2 = X1 xor Bernoulli(delta), X3 an independent fair bit.
inline JointPmf DsbsWithIndependentBit(double delta) {
  std::vector<double> p;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double pair = a == b ? (1.0 - delta) / 2.0 : delta / 2.0;
      for (int c = 0; c < 2; ++c) p.push_back(pair / 2.0);
    }
  }
  return JointPmf({"X1", "X2", "X3"}, {2, 2, 2}, p);
}

// X_k = (X0, X_k') for independent fair bits X0, X1', X2', X3'; the symbol
// of X_k is 2 * X0 + X_k'.
inline JointPmf SharedBitSources() {
  std::vector<double> p(64, 0.0);
  for (int x0 = 0; x0 < 2; ++x0) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int c = 0; c < 2; ++c) {
          p[(2 * x0 + a) * 16 + (2 * x0 + b) * 4 + (2 * x0 + c)] = 1.0 / 16.0;
        }
      }
    }
  }
  return JointPmf({"X1", "X2", "X3"}, {4, 4, 4}, p);
}

// W = X0 for SharedBitSources.
inline AuxChannel SharedBitChannel() {
  std::vector<std::size_t> labels(64);
  for (std::size_t i = 0; i < 64; ++i) labels[i] = (i / 16) / 2;
  return AuxChannel::Deterministic(labels, 2);
}

// X1 = X2 a fair bit.
inline JointPmf EqualBits() {
  return JointPmf({"X1", "X2"}, {2, 2}, {0.5, 0.0, 0.0, 0.5});
}

// W = X1 for a two-source pmf whose first source is binary.
inline AuxChannel FirstSourceCopy(const JointPmf& pmf) {
  std::vector<std::size_t> labels(pmf.size());
  for (std::size_t i = 0; i < pmf.size(); ++i) labels[i] = pmf.coordinate(i, 0);
  return AuxChannel::Deterministic(labels, pmf.cardinalities()[0]);
}

inline JointPmf IndependentBits() {
  return JointPmf({"X1", "X2"}, {2, 2}, {0.25, 0.25, 0.25, 0.25});
}

// Seeded joint with K in {2, 3} (or fixed), cardinalities in {2, 3}, and a
// random support of at most 8 outcomes carrying Dirichlet(1) mass.
inline JointPmf RandomJoint(std::uint64_t seed, std::size_t fixed_k = 0) {
  Rng rng(derive_seed(seed, 0x6a6f696eu));
  const std::size_t k = fixed_k != 0 ? fixed_k : 2 + uniform_below(rng(), 2);
  std::vector<std::size_t> cards(k);
  std::size_t size = 1;
  for (std::size_t& c : cards) {
    c = 2 + uniform_below(rng(), 2);
    size *= c;
  }
  const std::size_t max_support = std::min<std::size_t>(8, size);
  const std::size_t support = 2 + uniform_below(rng(), max_support - 1);
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < support; ++i) {
    std::swap(order[i], order[i + uniform_below(rng(), size - i)]);
  }
  const std::vector<double> mass = uniform_simplex(rng, support);
  std::vector<double> p(size, 0.0);
  for (std::size_t i = 0; i < support; ++i) p[order[i]] = mass[i];
  std::vector<std::string> names;
  for (std::size_t v = 0; v < k; ++v) names.push_back("X" + std::to_string(v + 1));
  return JointPmf(names, cards, p);
}

// Seeded channel with Dirichlet(1) rows; w_cardinality in 1..4 when 0.
inline AuxChannel RandomChannel(const JointPmf& pmf, std::uint64_t seed,
                                std::size_t w_cardinality = 0) {
  Rng rng(derive_seed(seed, 0x6368616eu));
  const std::size_t m =
      w_cardinality != 0 ? w_cardinality : 1 + uniform_below(rng(), 4);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    rows.push_back(uniform_simplex(rng, m));
  }
  return AuxChannel(m, std::move(rows));
}

}  // namespace gwpriv::testing

#endif  // GWPRIV_TESTS_SUPPORT_FIXTURES_HPP_
