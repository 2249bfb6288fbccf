// Copyright 2026 The posetforge Authors
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

// Poset interchange:
//
//   {"elements": ["a", "b", ...], "relations": [["a", "c"], ...]}
//
// Relations are generators; the order is their transitive closure. Written
// posets list their covering pairs as relations, in canonical index order, so
// reading and re-writing a written poset is the identity.
//
// DOT output draws covers bottom to top (rankdir=BT) with one rank=same group
// per height level.

#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "posetforge/lattice.hpp"
#include "posetforge/poset.hpp"

namespace posetforge {

// Malformed input, anchored at a 1-based line and column of the source text.
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// `source` names the input in error messages ("<stdin>", a file name).
Poset ParsePosetJson(const std::string& text, const std::string& source = "<input>");
Poset PosetFromJson(const nlohmann::json& j);
nlohmann::json PosetToJson(const Poset& p);

std::string ToDot(const Poset& p, const std::string& graph_name = "poset");

nlohmann::json IsoToJson(const Poset& p, const Poset& q, const PosetIso& iso);
nlohmann::json MeetJoinToJson(const Poset& p, const MeetJoinTable& table);
nlohmann::json DistributivityToJson(const Poset& p, const DistributivityReport& report);

}  // namespace posetforge
