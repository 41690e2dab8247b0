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
#include "gwpriv/distributions.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "gwpriv/error.hpp"

namespace gwpriv {
namespace {

std::vector<std::size_t> RowMajorStrides(const std::vector<std::size_t>& cards) {
  std::vector<std::size_t> strides(cards.size(), 1);
  for (std::size_t i = cards.size(); i-- > 1;) {
    strides[i - 1] = strides[i] * cards[i];
  }
  return strides;
}

void CheckProbabilityRow(std::span<const double> row, std::size_t index) {
  double sum = 0.0;
  for (double p : row) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      std::ostringstream msg;
      msg << "row " << index << " has entry " << p;
      throw Error(ErrorCode::kNegativeMass, msg.str());
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "row " << index << " sums to " << sum << " (deviation "
        << sum - 1.0 << ")";
    throw Error(ErrorCode::kNotNormalized, msg.str());
  }
}

}  // namespace

void validate_parts(const std::vector<std::string>& names,
                    const std::vector<std::size_t>& cardinalities,
                    std::span<const double> probabilities) {
  if (cardinalities.empty()) {
    throw Error(ErrorCode::kShapeMismatch, "no variables");
  }
  if (names.size() != cardinalities.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "got " + std::to_string(names.size()) + " names for " +
                    std::to_string(cardinalities.size()) + " variables");
  }
  std::size_t expected = 1;
  for (std::size_t c : cardinalities) {
    if (c == 0) {
      throw Error(ErrorCode::kShapeMismatch, "cardinality must be positive");
    }
    expected *= c;
  }
  if (probabilities.size() != expected) {
    throw Error(ErrorCode::kShapeMismatch,
                "tensor has " + std::to_string(probabilities.size()) +
                    " entries, cardinalities require " +
                    std::to_string(expected));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!(p >= 0.0) || !std::isfinite(p)) {
      std::ostringstream msg;
      msg << "entry " << i << " is " << p;
      throw Error(ErrorCode::kNegativeMass, msg.str());
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "sum is " << sum << " (deviation " << sum - 1.0 << ")";
    throw Error(ErrorCode::kNotNormalized, msg.str());
  }
}

JointPmf::JointPmf(std::vector<std::string> names,
                   std::vector<std::size_t> cardinalities,
                   std::vector<double> probabilities)
    : names_(std::move(names)),
      cards_(std::move(cardinalities)),
      probs_(std::move(probabilities)) {
  validate_parts(names_, cards_, probs_);
  strides_ = RowMajorStrides(cards_);
}

JointPmf JointPmf::FromCardinalities(std::vector<std::size_t> cardinalities,
                                     std::vector<double> probabilities) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cardinalities.size(); ++i) {
    names.push_back("X" + std::to_string(i + 1));
  }
  return JointPmf(std::move(names), std::move(cardinalities),
                  std::move(probabilities));
}

std::vector<std::size_t> JointPmf::unravel(std::size_t index) const {
  std::vector<std::size_t> coords(cards_.size());
  for (std::size_t v = 0; v < cards_.size(); ++v) {
    coords[v] = coordinate(index, v);
  }
  return coords;
}

std::size_t JointPmf::ravel(std::span<const std::size_t> coords) const {
  std::size_t index = 0;
  for (std::size_t v = 0; v < cards_.size(); ++v) {
    index += coords[v] * strides_[v];
  }
  return index;
}

std::vector<std::size_t> JointPmf::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] > 0.0) out.push_back(i);
  }
  return out;
}

std::size_t JointPmf::support_size() const {
  std::size_t count = 0;
  for (double p : probs_) count += p > 0.0 ? 1 : 0;
  return count;
}

AuxChannel::AuxChannel(std::size_t w_cardinality,
                       std::vector<std::vector<double>> rows)
    : w_card_(w_cardinality), num_rows_(rows.size()) {
  flat_.reserve(rows.size() * w_cardinality);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != w_cardinality) {
      throw Error(ErrorCode::kShapeMismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(w_cardinality));
    }
    flat_.insert(flat_.end(), rows[i].begin(), rows[i].end());
  }
  Check();
}

AuxChannel AuxChannel::FromFlat(std::size_t num_rows, std::size_t w_cardinality,
                                std::vector<double> flat) {
  AuxChannel aux;
  aux.w_card_ = w_cardinality;
  aux.num_rows_ = num_rows;
  aux.flat_ = std::move(flat);
  if (aux.flat_.size() != num_rows * w_cardinality) {
    throw Error(ErrorCode::kShapeMismatch, "flat channel has wrong length");
  }
  aux.Check();
  return aux;
}

AuxChannel AuxChannel::Deterministic(std::span<const std::size_t> labels,
                                     std::size_t w_cardinality) {
  std::vector<double> flat(labels.size() * w_cardinality, 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= w_cardinality) {
      throw Error(ErrorCode::kShapeMismatch, "label out of range");
    }
    flat[i * w_cardinality + labels[i]] = 1.0;
  }
  return FromFlat(labels.size(), w_cardinality, std::move(flat));
}

AuxChannel AuxChannel::Constant(std::size_t num_rows) {
  return FromFlat(num_rows, 1, std::vector<double>(num_rows, 1.0));
}

AuxChannel AuxChannel::Identity(std::size_t num_rows) {
  std::vector<std::size_t> labels(num_rows);
  std::iota(labels.begin(), labels.end(), 0);
  return Deterministic(labels, num_rows);
}

std::vector<std::vector<double>> AuxChannel::rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(num_rows_);
  for (std::size_t i = 0; i < num_rows_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

void AuxChannel::Check() const {
  if (w_card_ == 0) {
    throw Error(ErrorCode::kShapeMismatch, "w_cardinality must be positive");
  }
  if (num_rows_ == 0) {
    throw Error(ErrorCode::kShapeMismatch, "channel has no rows");
  }
  for (std::size_t i = 0; i < num_rows_; ++i) CheckProbabilityRow(row(i), i);
}

void validate(const JointPmf& pmf) {
  validate_parts(pmf.names(), pmf.cardinalities(), pmf.probabilities());
  if (pmf.support_size() == 0) {
    throw Error(ErrorCode::kNotNormalized, "empty support");
  }
}

JointPmf marginalize(const JointPmf& pmf, const VarSet& keep) {
  if (keep.empty()) {
    throw Error(ErrorCode::kEmptySelection, "marginalize needs a variable");
  }
  std::vector<bool> seen(pmf.num_vars(), false);
  std::vector<std::string> names;
  std::vector<std::size_t> cards;
  for (std::size_t v : keep) {
    if (v >= pmf.num_vars() || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad variable index " + std::to_string(v));
    }
    seen[v] = true;
    names.push_back(pmf.names()[v]);
    cards.push_back(pmf.cardinalities()[v]);
  }
  std::vector<std::size_t> out_strides = RowMajorStrides(cards);
  std::size_t out_size = out_strides[0] * cards[0];
  std::vector<double> out(out_size, 0.0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double p = pmf[i];
    if (p == 0.0) continue;
    std::size_t j = 0;
    for (std::size_t a = 0; a < keep.size(); ++a) {
      j += pmf.coordinate(i, keep[a]) * out_strides[a];
    }
    out[j] += p;
  }
  return JointPmf(std::move(names), std::move(cards), std::move(out));
}

JointPmf condition(const JointPmf& pmf, std::size_t on, std::size_t value) {
  if (on >= pmf.num_vars() || value >= pmf.cardinalities()[on]) {
    throw Error(ErrorCode::kInvalidArgument, "conditioning outcome out of range");
  }
  if (pmf.num_vars() < 2) {
    throw Error(ErrorCode::kEmptySelection, "nothing left after conditioning");
  }
  VarSet rest;
  for (std::size_t v = 0; v < pmf.num_vars(); ++v) {
    if (v != on) rest.push_back(v);
  }
  std::vector<std::string> names;
  std::vector<std::size_t> cards;
  for (std::size_t v : rest) {
    names.push_back(pmf.names()[v]);
    cards.push_back(pmf.cardinalities()[v]);
  }
  std::vector<std::size_t> out_strides = RowMajorStrides(cards);
  std::vector<double> out(out_strides[0] * cards[0], 0.0);
  double mass = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf.coordinate(i, on) != value || pmf[i] == 0.0) continue;
    std::size_t j = 0;
    for (std::size_t a = 0; a < rest.size(); ++a) {
      j += pmf.coordinate(i, rest[a]) * out_strides[a];
    }
    out[j] += pmf[i];
    mass += pmf[i];
  }
  if (mass <= 0.0) {
    throw Error(ErrorCode::kZeroProbabilityEvent,
                "P(" + pmf.names()[on] + " = " + std::to_string(value) + ") = 0");
  }
  for (double& p : out) p /= mass;
  return JointPmf(std::move(names), std::move(cards), std::move(out));
}

JointPmf join_with_aux(const JointPmf& pmf, const AuxChannel& w,
                       const std::string& w_name) {
  if (w.num_rows() != pmf.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "channel has " + std::to_string(w.num_rows()) +
                    " rows, pmf has " + std::to_string(pmf.size()) +
                    " joint outcomes");
  }
  const std::size_t m = w.w_cardinality();
  std::vector<double> out(pmf.size() * m);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    for (std::size_t v = 0; v < m; ++v) out[i * m + v] = pmf[i] * w(i, v);
  }
  std::vector<std::string> names = pmf.names();
  names.push_back(w_name);
  std::vector<std::size_t> cards = pmf.cardinalities();
  cards.push_back(m);
  return JointPmf(std::move(names), std::move(cards), std::move(out));
}

JointPmf product(const JointPmf& a, const JointPmf& b) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  std::vector<std::size_t> cards = a.cardinalities();
  cards.insert(cards.end(), b.cardinalities().begin(), b.cardinalities().end());
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out.push_back(a[i] * b[j]);
  }
  return JointPmf(std::move(names), std::move(cards), std::move(out));
}

}  // namespace gwpriv
