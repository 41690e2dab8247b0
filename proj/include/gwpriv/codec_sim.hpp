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
// Finite-blocklength random-binning code for the Gray-Wyner network.
//
// The common link carries the index of a w^n codeword, drawn i.i.d. from
// p(w), that is jointly typical with the source block; the private link to
// decoder k carries the hash bin of x_k^n. Decoder k looks for the unique
// sequence in its bin that is jointly typical with w^n.
//
// Typicality is conditional: a pair (x^n, w^n) qualifies when no position
// falls outside the support of the channel and the empirical joint law lies
// within `typicality_tolerance` total variation of the empirical law of the
// conditioning sequence times the channel.
//
// Message indices are 1-based; j0 == 0 marks an encoder failure.
#ifndef GWPRIV_CODEC_SIM_HPP_
#define GWPRIV_CODEC_SIM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gwpriv/distributions.hpp"
#include "gwpriv/infotheory.hpp"

namespace gwpriv {

struct CodeConfig {
  std::size_t n = 8;
  double slack = 0.1;
  double typicality_tolerance = 0.15;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMaxCodebookSize = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

// ⌈2^{n·rate}⌉. Throws kCodebookTooLarge above `limit`.
std::uint64_t code_size(std::size_t n, double rate, std::uint64_t limit);

class Codebook {
 public:
  Codebook(std::size_t n, std::size_t w_cardinality,
           std::vector<std::uint32_t> codewords, std::vector<std::uint64_t> bins,
           std::vector<std::size_t> source_cards, std::uint64_t seed);

  std::size_t n() const { return n_; }
  std::size_t w_cardinality() const { return w_card_; }
  std::uint64_t m0() const { return codewords_.size() / n_; }
  const std::vector<std::uint64_t>& bin_counts() const { return bins_; }
  std::uint64_t mk(std::size_t k) const { return bins_[k]; }
  std::uint64_t seed() const { return seed_; }

  // Codeword with 1-based index j0.
  std::span<const std::uint32_t> codeword(std::uint64_t j0) const {
    return {codewords_.data() + (j0 - 1) * n_, n_};
  }

  // 1-based bin of x_k^n; a seeded uniform hash, no table is stored.
  std::uint64_t bin_of(std::size_t k, std::span<const std::size_t> sequence) const;
  // Same, for a sequence given as its base-|X_k| code (first symbol most
  // significant).
  std::uint64_t bin_of_code(std::size_t k, std::uint64_t code) const;

  friend bool operator==(const Codebook&, const Codebook&) = default;

 private:
  std::size_t n_;
  std::size_t w_card_;
  std::vector<std::uint32_t> codewords_;
  std::vector<std::uint64_t> bins_;
  std::vector<std::size_t> source_cards_;
  std::uint64_t seed_;
};

// M0 = ⌈2^{n(I(X̄;W)+slack)}⌉, Mk = ⌈2^{n(H(X_k|W)+slack)}⌉. Throws
// kCodebookTooLarge when M0 > kMaxCodebookSize.
Codebook build_codebook(const JointPmf& pmf, const AuxChannel& w,
                        const CodeConfig& cfg);

// A source block: K sequences of length n.
using SourceBlock = std::vector<std::vector<std::size_t>>;

struct Messages {
  std::uint64_t j0 = 0;
  std::vector<std::uint64_t> jk;
};

// Joint typicality tests, exposed for testing.
bool encoder_typical(const JointPmf& pmf, const AuxChannel& w,
                     const SourceBlock& block,
                     std::span<const std::uint32_t> codeword, double tolerance);
bool decoder_typical(const JointPmf& pmf, const AuxChannel& w, std::size_t k,
                     std::span<const std::size_t> sequence,
                     std::span<const std::uint32_t> codeword, double tolerance);

// Returns std::nullopt on encoder failure. Smallest typical index wins.
std::optional<Messages> encode(const Codebook& codebook, const JointPmf& pmf,
                               const AuxChannel& w, const SourceBlock& block,
                               double tolerance);

// Decoder k with its bin index built once; |X_k|^n must not exceed
// kMaxEnumeration (kEnumerationTooLarge).
class Decoder {
 public:
  Decoder(const Codebook& codebook, const JointPmf& pmf, const AuxChannel& w,
          std::size_t k, double tolerance);

  // std::nullopt when zero or several sequences in bin jk are typical with
  // w^n(j0), or j0 == 0.
  std::optional<std::vector<std::size_t>> decode(std::uint64_t j0,
                                                 std::uint64_t jk) const;

 private:
  const Codebook* codebook_;
  std::size_t k_;
  std::size_t card_;
  double tolerance_;
  std::vector<double> pair_probs_;  // p(x_k, w), row-major over (x_k, w).
  std::vector<double> cond_probs_;  // p(x_k | w).
  // Every x_k^n code sorted by (bin, code); bin_keys_ holds the bins.
  std::vector<std::uint64_t> bin_keys_;
  std::vector<std::uint64_t> bin_codes_;
};

std::optional<std::vector<std::size_t>> decode(const Codebook& codebook,
                                               const JointPmf& pmf,
                                               const AuxChannel& w,
                                               std::size_t k, std::uint64_t j0,
                                               std::uint64_t jk,
                                               double tolerance);

struct SimReport {
  CodeConfig config;
  std::size_t trials = 0;
  std::uint64_t m0 = 0;
  std::vector<std::uint64_t> mk;
  double common_rate = 0.0;              // log2(M0) / n
  std::vector<double> private_rates;     // log2(Mk) / n
  std::size_t encoder_failures = 0;
  double encoder_failure_rate = 0.0;
  std::vector<std::size_t> decoder_errors;
  std::vector<double> error_rates;
  // Filled in exact mode only.
  std::vector<Bits> equivocation;
  // E_k - H(X̄|W,X_k), exact mode only.
  std::vector<double> equivocation_gap;
  Bits target_common = 0.0;              // I(X̄;W)
  std::vector<Bits> target_private;      // H(X_k|W)
  std::vector<Bits> target_equivocation; // H(X̄|W,X_k)
};

// Draws `trials` i.i.d. source blocks; an encoder failure is an error at every
// decoder. With `exact` the exact per-decoder equivocation is added.
SimReport run_trials(const JointPmf& pmf, const AuxChannel& w,
                     const CodeConfig& cfg, std::size_t trials,
                     bool exact = false, std::size_t threads = 1);

// (1/n) H(X̄^n∖X_k^n | J0, Jk) under the realized codebook, by enumerating
// every source block. Requires (support size)^n <= kMaxEnumeration.
Bits exact_equivocation(const JointPmf& pmf, const AuxChannel& w,
                        const Codebook& codebook, const CodeConfig& cfg,
                        std::size_t k);
std::vector<Bits> exact_equivocation_all(const JointPmf& pmf,
                                         const AuxChannel& w,
                                         const Codebook& codebook,
                                         const CodeConfig& cfg);

}  // namespace gwpriv

#endif  // GWPRIV_CODEC_SIM_HPP_
