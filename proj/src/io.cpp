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
#include "gwpriv/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "gwpriv/error.hpp"
#include "json.hpp"

namespace gwpriv {
namespace {

using Json = nlohmann::ordered_json;

Json ParseDocument(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports "line L, column C" in the message.
    throw Error(ErrorCode::kParseError, e.what());
  }
}

const Json& Field(const Json& doc, const char* name) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "document is not an object");
  }
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw Error(ErrorCode::kParseError,
                std::string("missing field \"") + name + "\"");
  }
  return *it;
}

template <typename T>
std::vector<T> ListField(const Json& doc, const char* name) {
  const Json& field = Field(doc, name);
  if (!field.is_array()) {
    throw Error(ErrorCode::kParseError,
                std::string("field \"") + name + "\" is not a list");
  }
  std::vector<T> out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    const Json& item = field[i];
    bool ok = false;
    if constexpr (std::is_same_v<T, std::string>) {
      ok = item.is_string();
    } else if constexpr (std::is_same_v<T, std::size_t>) {
      ok = item.is_number_unsigned() ||
           (item.is_number_integer() && item.template get<long long>() >= 0);
    } else {
      ok = item.is_number();
    }
    if (!ok) {
      throw Error(ErrorCode::kParseError, std::string("field \"") + name +
                                              "\" item " + std::to_string(i) +
                                              " has the wrong type");
    }
    out.push_back(item.template get<T>());
  }
  return out;
}

std::string ReadAll(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  return ReadAll(in);
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
  out << text;
}

}  // namespace

JointPmf parse_pmf(const std::string& text) {
  const Json doc = ParseDocument(text);
  auto names = ListField<std::string>(doc, "variables");
  auto cards = ListField<std::size_t>(doc, "cardinalities");
  auto probs = ListField<double>(doc, "pmf");
  return JointPmf(std::move(names), std::move(cards), std::move(probs));
}

AuxChannel parse_aux(const std::string& text) {
  const Json doc = ParseDocument(text);
  const Json& card = Field(doc, "w_cardinality");
  if (!card.is_number_unsigned()) {
    throw Error(ErrorCode::kParseError,
                "field \"w_cardinality\" is not a positive integer");
  }
  const Json& rows_field = Field(doc, "rows");
  if (!rows_field.is_array()) {
    throw Error(ErrorCode::kParseError, "field \"rows\" is not a list");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(rows_field.size());
  for (std::size_t i = 0; i < rows_field.size(); ++i) {
    const Json& row = rows_field[i];
    if (!row.is_array()) {
      throw Error(ErrorCode::kParseError,
                  "field \"rows\" item " + std::to_string(i) + " is not a list");
    }
    std::vector<double> values;
    for (const Json& v : row) {
      if (!v.is_number()) {
        throw Error(ErrorCode::kParseError, "field \"rows\" item " +
                                                std::to_string(i) +
                                                " has a non-numeric entry");
      }
      values.push_back(v.get<double>());
    }
    rows.push_back(std::move(values));
  }
  return AuxChannel(card.get<std::size_t>(), std::move(rows));
}

std::string format_pmf(const JointPmf& pmf) {
  Json doc;
  doc["variables"] = pmf.names();
  doc["cardinalities"] = pmf.cardinalities();
  doc["pmf"] = std::vector<double>(pmf.probabilities().begin(),
                                   pmf.probabilities().end());
  return doc.dump(2) + "\n";
}

std::string format_aux(const AuxChannel& aux) {
  Json doc;
  doc["w_cardinality"] = aux.w_cardinality();
  doc["rows"] = aux.rows();
  return doc.dump(2) + "\n";
}

JointPmf load_pmf(const std::filesystem::path& path) {
  try {
    return parse_pmf(ReadFile(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError,
                path.string() + ": " + e.detail());
  }
}

AuxChannel load_aux(const std::filesystem::path& path) {
  try {
    return parse_aux(ReadFile(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError,
                path.string() + ": " + e.detail());
  }
}

void save_pmf(const JointPmf& pmf, const std::filesystem::path& path) {
  WriteFile(path, format_pmf(pmf));
}

void save_aux(const AuxChannel& aux, const std::filesystem::path& path) {
  WriteFile(path, format_aux(aux));
}

JointPmf read_pmf(std::istream& in) { return parse_pmf(ReadAll(in)); }
AuxChannel read_aux(std::istream& in) { return parse_aux(ReadAll(in)); }
void write_pmf(const JointPmf& pmf, std::ostream& out) { out << format_pmf(pmf); }
void write_aux(const AuxChannel& aux, std::ostream& out) {
  out << format_aux(aux);
}

}  // namespace gwpriv
