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
#include "gwpriv/codec_sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "gwpriv/error.hpp"
#include "gwpriv/random.hpp"
#include "parallel.hpp"

namespace gwpriv {
namespace {

constexpr std::uint64_t kCodebookStream = 0x636f6465u;
constexpr std::uint64_t kBinStream = 0x62696e73u;
constexpr std::uint64_t kTrialStream = 0x7472696cu;
constexpr std::uint64_t kMaxBinCount = std::uint64_t{1} << 62;
constexpr double kExponentSnap = 1e-9;

void CheckConfig(const CodeConfig& cfg) {
  if (cfg.n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (!(cfg.slack >= 0.0) || !std::isfinite(cfg.slack)) {
    throw Error(ErrorCode::kInvalidArgument, "slack must be finite and >= 0");
  }
  if (!(cfg.typicality_tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "typicality tolerance must be > 0");
  }
}

// Checked integer power; returns false on passing `limit`.
bool BoundedPower(std::uint64_t base, std::size_t exponent, std::uint64_t limit,
                  std::uint64_t& out) {
  out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > limit / base) return false;
    out *= base;
  }
  return out <= limit;
}

std::vector<double> WMarginal(const JointPmf& pmf, const AuxChannel& w) {
  std::vector<double> out(w.w_cardinality(), 0.0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] == 0.0) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += pmf[i] * w(i, v);
  }
  return out;
}

void CheckShapes(const JointPmf& pmf, const AuxChannel& w) {
  if (w.num_rows() != pmf.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "channel has " + std::to_string(w.num_rows()) + " rows for " +
                    std::to_string(pmf.size()) + " outcomes");
  }
}

// Encoder test on a block given as joint outcome indices, one per position.
bool EncoderTypicalOutcomes(const AuxChannel& w,
                            std::span<const std::size_t> outcomes,
                            std::span<const std::uint32_t> codeword,
                            double tolerance) {
  const std::size_t n = outcomes.size();
  for (std::size_t t = 0; t < n; ++t) {
    if (w(outcomes[t], codeword[t]) <= 0.0) return false;
  }
  std::vector<double> counts(w.w_cardinality());
  double tv = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    bool seen = false;
    for (std::size_t u = 0; u < t && !seen; ++u) seen = outcomes[u] == outcomes[t];
    if (seen) continue;
    std::fill(counts.begin(), counts.end(), 0.0);
    double count = 0.0;
    for (std::size_t u = t; u < n; ++u) {
      if (outcomes[u] != outcomes[t]) continue;
      counts[codeword[u]] += 1.0;
      count += 1.0;
    }
    for (std::size_t v = 0; v < counts.size(); ++v) {
      tv += std::abs(counts[v] - count * w(outcomes[t], v));
    }
  }
  return 0.5 * tv / static_cast<double>(n) <= tolerance;
}

// Decoder test from precomputed p(x,w) and p(x|w) tables over (x, w).
bool DecoderTypicalTables(std::size_t card, std::size_t w_card,
                          const std::vector<double>& pair_probs,
                          const std::vector<double>& cond_probs,
                          std::span<const std::size_t> sequence,
                          std::span<const std::uint32_t> codeword,
                          double tolerance) {
  const std::size_t n = sequence.size();
  std::vector<double> joint(card * w_card, 0.0);
  std::vector<double> w_counts(w_card, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t cell = sequence[t] * w_card + codeword[t];
    if (pair_probs[cell] <= 0.0) return false;
    joint[cell] += 1.0;
    w_counts[codeword[t]] += 1.0;
  }
  double tv = 0.0;
  for (std::size_t x = 0; x < card; ++x) {
    for (std::size_t v = 0; v < w_card; ++v) {
      const std::size_t cell = x * w_card + v;
      tv += std::abs(joint[cell] - w_counts[v] * cond_probs[cell]);
    }
  }
  return 0.5 * tv / static_cast<double>(n) <= tolerance;
}

// p(x_k, w) and p(x_k | w), row-major over (x_k, w).
void PairTables(const JointPmf& pmf, const AuxChannel& w, std::size_t k,
                std::vector<double>& pair_probs, std::vector<double>& cond_probs) {
  const std::size_t card = pmf.cardinalities()[k];
  const std::size_t w_card = w.w_cardinality();
  pair_probs.assign(card * w_card, 0.0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] == 0.0) continue;
    const std::size_t x = pmf.coordinate(i, k);
    for (std::size_t v = 0; v < w_card; ++v) {
      pair_probs[x * w_card + v] += pmf[i] * w(i, v);
    }
  }
  cond_probs.assign(card * w_card, 0.0);
  for (std::size_t v = 0; v < w_card; ++v) {
    double total = 0.0;
    for (std::size_t x = 0; x < card; ++x) total += pair_probs[x * w_card + v];
    for (std::size_t x = 0; x < card; ++x) {
      cond_probs[x * w_card + v] =
          total > 0.0 ? pair_probs[x * w_card + v] / total : 0.0;
    }
  }
}

std::uint64_t SequenceCode(std::span<const std::size_t> sequence,
                           std::size_t card) {
  std::uint64_t code = 0;
  for (std::size_t x : sequence) code = code * card + x;
  return code;
}

void CodeToSequence(std::uint64_t code, std::size_t card,
                    std::vector<std::size_t>& out) {
  for (std::size_t t = out.size(); t-- > 0;) {
    out[t] = code % card;
    code /= card;
  }
}

std::vector<std::size_t> BlockOutcomes(const JointPmf& pmf,
                                       const SourceBlock& block, std::size_t n) {
  if (block.size() != pmf.num_vars()) {
    throw Error(ErrorCode::kShapeMismatch, "block has the wrong source count");
  }
  std::vector<std::size_t> outcomes(n);
  std::vector<std::size_t> coords(pmf.num_vars());
  for (std::size_t k = 0; k < block.size(); ++k) {
    if (block[k].size() != n) {
      throw Error(ErrorCode::kShapeMismatch, "block sequence has the wrong length");
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t k = 0; k < block.size(); ++k) coords[k] = block[k][t];
    outcomes[t] = pmf.ravel(coords);
  }
  return outcomes;
}

// j0 of every block of support outcomes, indexed in base |support| with the
// first position most significant. Candidate codewords are narrowed by
// per-position support bitsets along a depth-first walk over positions.
std::vector<std::uint32_t> EncoderTable(const JointPmf& pmf, const AuxChannel& w,
                                        const Codebook& codebook,
                                        double tolerance) {
  const std::vector<std::size_t> support = pmf.support();
  const std::size_t s = support.size();
  const std::size_t n = codebook.n();
  const std::uint64_t m0 = codebook.m0();
  const std::size_t words = static_cast<std::size_t>((m0 + 63) / 64);
  std::uint64_t blocks = 0;
  BoundedPower(s, n, kMaxEnumeration, blocks);

  // compat[(t * s + σ) * words + b]: codewords whose symbol at t is allowed
  // for outcome σ.
  std::vector<std::uint64_t> compat(n * s * words, 0);
  for (std::uint64_t j = 0; j < m0; ++j) {
    const auto cw = codebook.codeword(j + 1);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t a = 0; a < s; ++a) {
        if (w(support[a], cw[t]) > 0.0) {
          compat[(t * s + a) * words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
      }
    }
  }

  std::vector<std::uint32_t> table(blocks, 0);
  std::vector<std::uint64_t> prefix((n + 1) * words, ~std::uint64_t{0});
  std::vector<std::size_t> choice(n, 0);
  std::vector<std::size_t> outcomes(n);
  std::size_t depth = 0;
  std::uint64_t index = 0;
  while (true) {
    // Extend the prefix down to a leaf.
    while (depth < n) {
      const std::uint64_t* from = &prefix[depth * words];
      const std::uint64_t* mask = &compat[(depth * s + choice[depth]) * words];
      std::uint64_t* to = &prefix[(depth + 1) * words];
      for (std::size_t b = 0; b < words; ++b) to[b] = from[b] & mask[b];
      outcomes[depth] = support[choice[depth]];
      ++depth;
    }
    const std::uint64_t* candidates = &prefix[n * words];
    std::uint32_t j0 = 0;
    for (std::size_t b = 0; b < words && j0 == 0; ++b) {
      std::uint64_t bits = candidates[b];
      while (bits != 0) {
        const std::uint64_t j = b * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (j >= m0) break;
        if (EncoderTypicalOutcomes(w, outcomes, codebook.codeword(j + 1),
                                   tolerance)) {
          j0 = static_cast<std::uint32_t>(j + 1);
          break;
        }
      }
    }
    table[index++] = j0;
    // Advance the odometer.
    while (depth > 0 && choice[depth - 1] + 1 == s) {
      choice[--depth] = 0;
    }
    if (depth == 0) break;
    ++choice[depth - 1];
    --depth;
  }
  return table;
}

struct PairKey {
  std::uint64_t j0;
  std::uint64_t jk;
  friend bool operator==(const PairKey&, const PairKey&) = default;
  friend bool operator<(const PairKey& a, const PairKey& b) {
    return a.j0 != b.j0 ? a.j0 < b.j0 : a.jk < b.jk;
  }
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& key) const {
    return static_cast<std::size_t>(splitmix64(key.j0 * 0x9e3779b97f4a7c15ULL ^ key.jk));
  }
};

// (1/n) H(others^n | J0, Jk) from the encoder table.
Bits EquivocationFromTable(const JointPmf& pmf, const Codebook& codebook,
                           const std::vector<std::uint32_t>& table,
                           std::size_t k) {
  const std::vector<std::size_t> support = pmf.support();
  const std::size_t s = support.size();
  const std::size_t n = codebook.n();
  const std::size_t card = pmf.cardinalities()[k];

  // Group support outcomes by their projection on the other sources.
  std::vector<std::size_t> projection_of(s);
  std::vector<std::vector<std::size_t>> members;
  {
    std::vector<std::vector<std::size_t>> keys;
    for (std::size_t a = 0; a < s; ++a) {
      std::vector<std::size_t> key;
      for (std::size_t v = 0; v < pmf.num_vars(); ++v) {
        if (v != k) key.push_back(pmf.coordinate(support[a], v));
      }
      const auto it = std::find(keys.begin(), keys.end(), key);
      projection_of[a] = static_cast<std::size_t>(it - keys.begin());
      if (it == keys.end()) {
        keys.push_back(std::move(key));
        members.emplace_back();
      }
      members[projection_of[a]].push_back(a);
    }
  }
  const std::size_t d = members.size();

  std::unordered_map<PairKey, double, PairKeyHash> global;
  std::vector<std::pair<PairKey, double>> local;
  double h_joint = 0.0;
  std::vector<std::size_t> others(n, 0);
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    local.clear();
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t block = 0;
      std::uint64_t code = 0;
      double prob = 1.0;
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t a = members[others[t]][pick[t]];
        block = block * s + a;
        code = code * card + pmf.coordinate(support[a], k);
        prob *= pmf[support[a]];
      }
      local.push_back({{table[block], codebook.bin_of_code(k, code)}, prob});
      std::size_t t = n;
      while (t > 0 && pick[t - 1] + 1 == members[others[t - 1]].size()) {
        pick[--t] = 0;
      }
      if (t == 0) break;
      ++pick[t - 1];
    }
    std::sort(local.begin(), local.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < local.size();) {
      double mass = 0.0;
      std::size_t j = i;
      for (; j < local.size() && local[j].first == local[i].first; ++j) {
        mass += local[j].second;
      }
      if (mass > 0.0) h_joint -= mass * std::log2(mass);
      global[local[i].first] += mass;
      i = j;
    }
    std::size_t t = n;
    while (t > 0 && others[t - 1] + 1 == d) others[--t] = 0;
    if (t == 0) break;
    ++others[t - 1];
  }

  std::vector<std::pair<PairKey, double>> sorted(global.begin(), global.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  double h_messages = 0.0;
  for (const auto& [key, mass] : sorted) {
    if (mass > 0.0) h_messages -= mass * std::log2(mass);
  }
  return clamp_measure((h_joint - h_messages) / static_cast<double>(n));
}

std::vector<std::uint32_t> CheckedEncoderTable(const JointPmf& pmf,
                                               const AuxChannel& w,
                                               const Codebook& codebook,
                                               const CodeConfig& cfg) {
  CheckConfig(cfg);
  CheckShapes(pmf, w);
  if (codebook.n() != cfg.n) {
    throw Error(ErrorCode::kInvalidArgument, "codebook blocklength differs from n");
  }
  std::uint64_t blocks = 0;
  if (!BoundedPower(pmf.support_size(), cfg.n, kMaxEnumeration, blocks)) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                std::to_string(pmf.support_size()) + "^" + std::to_string(cfg.n) +
                    " source blocks exceed the enumeration limit");
  }
  return EncoderTable(pmf, w, codebook, cfg.typicality_tolerance);
}

}  // namespace

std::uint64_t code_size(std::size_t n, double rate, std::uint64_t limit) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw Error(ErrorCode::kInvalidArgument, "rate must be finite and >= 0");
  }
  double exponent = static_cast<double>(n) * rate;
  // Rates like 1 - 1e-16 must not add a codeword through rounding.
  if (std::abs(exponent - std::round(exponent)) <= kExponentSnap) {
    exponent = std::round(exponent);
  }
  const double size = std::ceil(std::exp2(exponent));
  if (!(size <= static_cast<double>(limit))) {
    throw Error(ErrorCode::kCodebookTooLarge,
                "code size 2^" + std::to_string(exponent) + " exceeds the limit");
  }
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(size));
}

Codebook::Codebook(std::size_t n, std::size_t w_cardinality,
                   std::vector<std::uint32_t> codewords,
                   std::vector<std::uint64_t> bins,
                   std::vector<std::size_t> source_cards, std::uint64_t seed)
    : n_(n),
      w_card_(w_cardinality),
      codewords_(std::move(codewords)),
      bins_(std::move(bins)),
      source_cards_(std::move(source_cards)),
      seed_(seed) {
  if (n_ == 0 || codewords_.empty() || codewords_.size() % n_ != 0) {
    throw Error(ErrorCode::kShapeMismatch, "codewords do not fill whole blocks");
  }
  if (bins_.size() != source_cards_.size()) {
    throw Error(ErrorCode::kShapeMismatch, "one bin count per source expected");
  }
  for (std::uint32_t v : codewords_) {
    if (v >= w_card_) throw Error(ErrorCode::kInvalidArgument, "codeword symbol out of range");
  }
  for (std::uint64_t m : bins_) {
    if (m == 0) throw Error(ErrorCode::kInvalidArgument, "bin count must be >= 1");
  }
}

std::uint64_t Codebook::bin_of_code(std::size_t k, std::uint64_t code) const {
  const std::uint64_t h = splitmix64(derive_seed(seed_, kBinStream, k) ^ code);
  return 1 + uniform_below(h, bins_[k]);
}

std::uint64_t Codebook::bin_of(std::size_t k,
                               std::span<const std::size_t> sequence) const {
  return bin_of_code(k, SequenceCode(sequence, source_cards_[k]));
}

Codebook build_codebook(const JointPmf& pmf, const AuxChannel& w,
                        const CodeConfig& cfg) {
  CheckConfig(cfg);
  CheckShapes(pmf, w);
  const JointPmf joined = join_with_aux(pmf, w);
  const std::size_t num_sources = pmf.num_vars();
  const VarSet aux = {num_sources};

  const std::uint64_t m0 = code_size(
      cfg.n, mutual_information(joined, all_vars(num_sources), aux) + cfg.slack,
      kMaxCodebookSize);
  std::vector<std::uint64_t> bins;
  for (std::size_t k = 0; k < num_sources; ++k) {
    bins.push_back(code_size(
        cfg.n, conditional_entropy(joined, {k}, aux) + cfg.slack, kMaxBinCount));
  }

  const std::vector<double> pw = WMarginal(pmf, w);
  Rng rng(derive_seed(cfg.seed, kCodebookStream));
  std::vector<std::uint32_t> codewords(m0 * cfg.n);
  for (std::uint32_t& v : codewords) {
    v = static_cast<std::uint32_t>(sample_index(rng, pw));
  }
  return Codebook(cfg.n, w.w_cardinality(), std::move(codewords),
                  std::move(bins), pmf.cardinalities(), cfg.seed);
}

bool encoder_typical(const JointPmf& pmf, const AuxChannel& w,
                     const SourceBlock& block,
                     std::span<const std::uint32_t> codeword, double tolerance) {
  CheckShapes(pmf, w);
  const std::vector<std::size_t> outcomes =
      BlockOutcomes(pmf, block, codeword.size());
  return EncoderTypicalOutcomes(w, outcomes, codeword, tolerance);
}

bool decoder_typical(const JointPmf& pmf, const AuxChannel& w, std::size_t k,
                     std::span<const std::size_t> sequence,
                     std::span<const std::uint32_t> codeword, double tolerance) {
  CheckShapes(pmf, w);
  if (k >= pmf.num_vars() || sequence.size() != codeword.size()) {
    throw Error(ErrorCode::kShapeMismatch, "bad decoder index or length");
  }
  std::vector<double> pair_probs;
  std::vector<double> cond_probs;
  PairTables(pmf, w, k, pair_probs, cond_probs);
  return DecoderTypicalTables(pmf.cardinalities()[k], w.w_cardinality(),
                              pair_probs, cond_probs, sequence, codeword,
                              tolerance);
}

std::optional<Messages> encode(const Codebook& codebook, const JointPmf& pmf,
                               const AuxChannel& w, const SourceBlock& block,
                               double tolerance) {
  CheckShapes(pmf, w);
  const std::vector<std::size_t> outcomes =
      BlockOutcomes(pmf, block, codebook.n());
  for (std::uint64_t j = 1; j <= codebook.m0(); ++j) {
    if (!EncoderTypicalOutcomes(w, outcomes, codebook.codeword(j), tolerance)) {
      continue;
    }
    Messages out;
    out.j0 = j;
    for (std::size_t k = 0; k < block.size(); ++k) {
      out.jk.push_back(codebook.bin_of(k, block[k]));
    }
    return out;
  }
  return std::nullopt;
}

Decoder::Decoder(const Codebook& codebook, const JointPmf& pmf,
                 const AuxChannel& w, std::size_t k, double tolerance)
    : codebook_(&codebook),
      k_(k),
      card_(0),
      tolerance_(tolerance) {
  CheckShapes(pmf, w);
  if (k >= pmf.num_vars()) {
    throw Error(ErrorCode::kInvalidArgument, "decoder index out of range");
  }
  card_ = pmf.cardinalities()[k];
  std::uint64_t count = 0;
  if (!BoundedPower(card_, codebook.n(), kMaxEnumeration, count)) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                std::to_string(card_) + "^" + std::to_string(codebook.n()) +
                    " sequences exceed the enumeration limit");
  }
  PairTables(pmf, w, k, pair_probs_, cond_probs_);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    entries[code] = {codebook.bin_of_code(k, code), code};
  }
  std::sort(entries.begin(), entries.end());
  bin_keys_.reserve(count);
  bin_codes_.reserve(count);
  for (const auto& [bin, code] : entries) {
    bin_keys_.push_back(bin);
    bin_codes_.push_back(code);
  }
}

std::optional<std::vector<std::size_t>> Decoder::decode(std::uint64_t j0,
                                                        std::uint64_t jk) const {
  if (j0 == 0 || j0 > codebook_->m0()) return std::nullopt;
  const auto codeword = codebook_->codeword(j0);
  const auto [first, last] =
      std::equal_range(bin_keys_.begin(), bin_keys_.end(), jk);
  std::vector<std::size_t> sequence(codebook_->n());
  std::optional<std::vector<std::size_t>> found;
  for (auto it = first; it != last; ++it) {
    CodeToSequence(bin_codes_[it - bin_keys_.begin()], card_, sequence);
    if (!DecoderTypicalTables(card_, codebook_->w_cardinality(), pair_probs_,
                              cond_probs_, sequence, codeword, tolerance_)) {
      continue;
    }
    if (found) return std::nullopt;
    found = sequence;
  }
  return found;
}

std::optional<std::vector<std::size_t>> decode(const Codebook& codebook,
                                               const JointPmf& pmf,
                                               const AuxChannel& w,
                                               std::size_t k, std::uint64_t j0,
                                               std::uint64_t jk,
                                               double tolerance) {
  return Decoder(codebook, pmf, w, k, tolerance).decode(j0, jk);
}

SimReport run_trials(const JointPmf& pmf, const AuxChannel& w,
                     const CodeConfig& cfg, std::size_t trials, bool exact,
                     std::size_t threads) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const Codebook codebook = build_codebook(pmf, w, cfg);
  const std::size_t num_sources = pmf.num_vars();
  const std::size_t n = cfg.n;

  SimReport report;
  report.config = cfg;
  report.trials = trials;
  report.m0 = codebook.m0();
  report.mk = codebook.bin_counts();
  report.common_rate = std::log2(static_cast<double>(report.m0)) / n;
  for (std::uint64_t m : report.mk) {
    report.private_rates.push_back(std::log2(static_cast<double>(m)) / n);
  }
  const JointPmf joined = join_with_aux(pmf, w);
  const VarSet aux = {num_sources};
  report.target_common =
      mutual_information(joined, all_vars(num_sources), aux);
  for (std::size_t k = 0; k < num_sources; ++k) {
    report.target_private.push_back(conditional_entropy(joined, {k}, aux));
    const VarSet others = complement({k}, num_sources);
    report.target_equivocation.push_back(
        conditional_entropy(joined, others, {num_sources, k}));
  }

  std::vector<Decoder> decoders;
  for (std::size_t k = 0; k < num_sources; ++k) {
    decoders.emplace_back(codebook, pmf, w, k, cfg.typicality_tolerance);
  }

  // One slot per trial: bit 0 encoder failure, bit k+1 error at decoder k.
  std::vector<std::uint32_t> outcome(trials, 0);
  const std::vector<double> probs(pmf.probabilities().begin(),
                                  pmf.probabilities().end());
  internal::parallel_for(trials, threads, [&](std::size_t trial) {
    Rng rng(derive_seed(cfg.seed, kTrialStream, trial));
    SourceBlock block(num_sources, std::vector<std::size_t>(n));
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t i = sample_index(rng, probs);
      for (std::size_t k = 0; k < num_sources; ++k) {
        block[k][t] = pmf.coordinate(i, k);
      }
    }
    const std::optional<Messages> messages =
        encode(codebook, pmf, w, block, cfg.typicality_tolerance);
    std::uint32_t bits = 0;
    if (!messages) {
      bits = ~std::uint32_t{0};
    } else {
      for (std::size_t k = 0; k < num_sources; ++k) {
        const auto decoded = decoders[k].decode(messages->j0, messages->jk[k]);
        if (!decoded || *decoded != block[k]) bits |= std::uint32_t{1} << (k + 1);
      }
    }
    outcome[trial] = bits;
  });

  report.decoder_errors.assign(num_sources, 0);
  for (std::uint32_t bits : outcome) {
    if (bits & 1u) ++report.encoder_failures;
    for (std::size_t k = 0; k < num_sources; ++k) {
      if (bits & (std::uint32_t{1} << (k + 1))) ++report.decoder_errors[k];
    }
  }
  const double total = static_cast<double>(trials);
  report.encoder_failure_rate = report.encoder_failures / total;
  for (std::size_t errors : report.decoder_errors) {
    report.error_rates.push_back(errors / total);
  }

  if (exact) {
    report.equivocation = exact_equivocation_all(pmf, w, codebook, cfg);
    for (std::size_t k = 0; k < num_sources; ++k) {
      report.equivocation_gap.push_back(report.equivocation[k] -
                                        report.target_equivocation[k]);
    }
  }
  return report;
}

Bits exact_equivocation(const JointPmf& pmf, const AuxChannel& w,
                        const Codebook& codebook, const CodeConfig& cfg,
                        std::size_t k) {
  if (k >= pmf.num_vars()) {
    throw Error(ErrorCode::kInvalidArgument, "decoder index out of range");
  }
  const std::vector<std::uint32_t> table =
      CheckedEncoderTable(pmf, w, codebook, cfg);
  return EquivocationFromTable(pmf, codebook, table, k);
}

std::vector<Bits> exact_equivocation_all(const JointPmf& pmf,
                                         const AuxChannel& w,
                                         const Codebook& codebook,
                                         const CodeConfig& cfg) {
  const std::vector<std::uint32_t> table =
      CheckedEncoderTable(pmf, w, codebook, cfg);
  std::vector<Bits> out;
  for (std::size_t k = 0; k < pmf.num_vars(); ++k) {
    out.push_back(EquivocationFromTable(pmf, codebook, table, k));
  }
  return out;
}

}  // namespace gwpriv
