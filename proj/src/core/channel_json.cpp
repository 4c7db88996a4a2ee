// Copyright 2026 The relbound authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/channel_json.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace relbound {

namespace {

using nlohmann::json;

Rat entry_to_rat(const json& cell, int row, int col) {
  const std::string where =
      " at row " + std::to_string(row) + ", column " + std::to_string(col);
  if (cell.is_string()) {
    return parse_rational(cell.get<std::string>());
  }
  if (cell.is_number_integer()) {
    return Rat(cell.get<long>());
  }
  if (cell.is_number_float()) {
    throw ParseError("floating-point entry" + where +
                     "; write probabilities as \"num/den\" strings");
  }
  throw ParseError("entry is not a rational string" + where);
}

}  // namespace

Channel channel_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("channel document must be an object");
  for (const char* field : {"input", "output", "rows"}) {
    if (!doc.contains(field)) {
      throw ParseError(std::string("missing field \"") + field + "\"");
    }
  }
  if (!doc["input"].is_number_integer() ||
      !doc["output"].is_number_integer()) {
    throw ParseError("\"input\" and \"output\" must be integers");
  }
  const long inputs = doc["input"].get<long>();
  const long outputs = doc["output"].get<long>();
  if (!doc["rows"].is_array()) throw ParseError("\"rows\" must be an array");
  if (static_cast<long>(doc["rows"].size()) != inputs) {
    throw ParseError("\"rows\" has " + std::to_string(doc["rows"].size()) +
                     " rows, \"input\" says " + std::to_string(inputs));
  }

  std::vector<std::vector<Rat>> rows;
  rows.reserve(doc["rows"].size());
  int x = 0;
  for (const json& row : doc["rows"]) {
    if (!row.is_array() || static_cast<long>(row.size()) != outputs) {
      throw ParseError("row " + std::to_string(x) + " must be an array of " +
                       std::to_string(outputs) + " entries");
    }
    std::vector<Rat> parsed;
    parsed.reserve(row.size());
    int y = 0;
    for (const json& cell : row) {
      parsed.push_back(entry_to_rat(cell, x, y));
      ++y;
    }
    rows.push_back(std::move(parsed));
    ++x;
  }
  return Channel::from_rows(std::move(rows));
}

std::string channel_to_json(const Channel& w) {
  json rows = json::array();
  for (int x = 0; x < w.input_size(); ++x) {
    json row = json::array();
    for (int y = 0; y < w.output_size(); ++y) {
      row.push_back(rat_to_string(w.prob(x, y)));
    }
    rows.push_back(std::move(row));
  }
  json doc{{"input", w.input_size()},
           {"output", w.output_size()},
           {"rows", std::move(rows)}};
  return doc.dump(2);
}

}  // namespace relbound
