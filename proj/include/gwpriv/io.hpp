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
// JSON documents for JointPmf and AuxChannel.
//
//   {"variables": ["X1", "X2"], "cardinalities": [2, 2],
//    "pmf": [0.25, 0.25, 0.25, 0.25]}
//   {"w_cardinality": 2, "rows": [[1, 0], [0, 1], ...]}
//
// Doubles are written in shortest round-trip form, so load(save(x)) == x
// bit for bit.
#ifndef GWPRIV_IO_HPP_
#define GWPRIV_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "gwpriv/distributions.hpp"

namespace gwpriv {

JointPmf parse_pmf(const std::string& text);
AuxChannel parse_aux(const std::string& text);
std::string format_pmf(const JointPmf& pmf);
std::string format_aux(const AuxChannel& aux);

JointPmf load_pmf(const std::filesystem::path& path);
AuxChannel load_aux(const std::filesystem::path& path);
void save_pmf(const JointPmf& pmf, const std::filesystem::path& path);
void save_aux(const AuxChannel& aux, const std::filesystem::path& path);

JointPmf read_pmf(std::istream& in);
AuxChannel read_aux(std::istream& in);
void write_pmf(const JointPmf& pmf, std::ostream& out);
void write_aux(const AuxChannel& aux, std::ostream& out);

}  // namespace gwpriv

#endif  // GWPRIV_IO_HPP_
