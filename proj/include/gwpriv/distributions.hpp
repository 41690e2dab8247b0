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
// Discrete joint distributions of K finite-alphabet sources and auxiliary
// channels p(w | x1..xK). Tensors are dense and row-major: the last variable
// varies fastest. Zero-probability outcomes stay in the alphabet.
#ifndef GWPRIV_DISTRIBUTIONS_HPP_
#define GWPRIV_DISTRIBUTIONS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gwpriv {

inline constexpr double kNormalizationTolerance = 1e-12;

// Ordered list of variable indices into a JointPmf.
using VarSet = std::vector<std::size_t>;

// Checks the JointPmf invariants on raw parts. Throws Error with kShapeMismatch,
// kNegativeMass or kNotNormalized (the message carries the deviation).
void validate_parts(const std::vector<std::string>& names,
                    const std::vector<std::size_t>& cardinalities,
                    std::span<const double> probabilities);

class JointPmf {
 public:
  // Validates; see validate_parts.
  JointPmf(std::vector<std::string> names, std::vector<std::size_t> cardinalities,
           std::vector<double> probabilities);

  // Names default to X1..XK.
  static JointPmf FromCardinalities(std::vector<std::size_t> cardinalities,
                                    std::vector<double> probabilities);

  std::size_t num_vars() const { return cards_.size(); }
  std::size_t size() const { return probs_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& cardinalities() const { return cards_; }
  std::span<const double> probabilities() const { return probs_; }
  double operator[](std::size_t index) const { return probs_[index]; }

  // Row-major stride of variable `var`.
  std::size_t stride(std::size_t var) const { return strides_[var]; }
  std::size_t coordinate(std::size_t index, std::size_t var) const {
    return (index / strides_[var]) % cards_[var];
  }
  std::vector<std::size_t> unravel(std::size_t index) const;
  std::size_t ravel(std::span<const std::size_t> coords) const;

  // Indices of outcomes with positive probability, ascending.
  std::vector<std::size_t> support() const;
  std::size_t support_size() const;

  friend bool operator==(const JointPmf&, const JointPmf&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> cards_;
  std::vector<std::size_t> strides_;
  std::vector<double> probs_;
};

// Conditional law p(w | x̄), one row per joint outcome of the sources.
class AuxChannel {
 public:
  AuxChannel() = default;
  AuxChannel(std::size_t w_cardinality, std::vector<std::vector<double>> rows);

  // Flat row-major storage: rows.size() == num_rows * w_cardinality.
  static AuxChannel FromFlat(std::size_t num_rows, std::size_t w_cardinality,
                             std::vector<double> flat);
  // Deterministic channel w = labels[x̄].
  static AuxChannel Deterministic(std::span<const std::size_t> labels,
                                  std::size_t w_cardinality);
  // W carries nothing: a single symbol.
  static AuxChannel Constant(std::size_t num_rows);
  // W = X̄: one symbol per joint outcome.
  static AuxChannel Identity(std::size_t num_rows);

  std::size_t w_cardinality() const { return w_card_; }
  std::size_t num_rows() const { return num_rows_; }
  std::span<const double> row(std::size_t index) const {
    return {flat_.data() + index * w_card_, w_card_};
  }
  double operator()(std::size_t row, std::size_t w) const {
    return flat_[row * w_card_ + w];
  }
  std::span<const double> flat() const { return flat_; }
  std::vector<std::vector<double>> rows() const;

  friend bool operator==(const AuxChannel&, const AuxChannel&) = default;

 private:
  void Check() const;

  std::size_t w_card_ = 0;
  std::size_t num_rows_ = 0;
  std::vector<double> flat_;
};

// Re-checks all JointPmf invariants (construction already enforces them).
void validate(const JointPmf& pmf);

// Marginal over `keep`, variables in the order given. Throws kEmptySelection
// for an empty selection, kInvalidArgument for out-of-range or repeated
// indices.
JointPmf marginalize(const JointPmf& pmf, const VarSet& keep);

// Law of the remaining variables given X_on = value. Throws
// kZeroProbabilityEvent when P(X_on = value) == 0.
JointPmf condition(const JointPmf& pmf, std::size_t on, std::size_t value);

// Joint law of (X1..XK, W) with W appended as the last variable.
JointPmf join_with_aux(const JointPmf& pmf, const AuxChannel& w,
                       const std::string& w_name = "W");

// Product law of independent factors, variables concatenated in order.
JointPmf product(const JointPmf& a, const JointPmf& b);

}  // namespace gwpriv

#endif  // GWPRIV_DISTRIBUTIONS_HPP_
