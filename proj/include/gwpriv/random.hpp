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
// Seeded randomness. std::mt19937_64 is fully specified; the distributions
// below are written out because the <random> ones are implementation-defined.
#ifndef GWPRIV_RANDOM_HPP_
#define GWPRIV_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gwpriv {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream seed for (seed, stream, index).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) + index);
}

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by 128-bit multiply-shift.
inline std::uint64_t uniform_below(std::uint64_t random, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(random) * bound) >> 64);
}

// Index drawn from a probability vector by inverse CDF.
inline std::size_t sample_index(Rng& rng, std::span<const double> probs) {
  const double u = uniform01(rng);
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    acc += probs[i];
    last = i;
    if (u < acc) return i;
  }
  return last;
}

// Flat Dirichlet(1, ..., 1) draw.
inline std::vector<double> uniform_simplex(Rng& rng, std::size_t size) {
  std::vector<double> out(size);
  double total = 0.0;
  for (double& v : out) {
    v = -std::log(1.0 - uniform01(rng));
    total += v;
  }
  for (double& v : out) v /= total;
  return out;
}

}  // namespace gwpriv

#endif  // GWPRIV_RANDOM_HPP_
