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

#include "posetforge/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace posetforge {

InputError::InputError(std::string source, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> LineColumn(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Best-effort anchor for semantic errors: the first occurrence of the quoted
// label after `key`, else the key itself, else the start.
std::size_t Locate(const std::string& text, const std::string& key, const std::string& label) {
  std::size_t base = text.find("\"" + key + "\"");
  if (base == std::string::npos) base = 0;
  if (!label.empty()) {
    const std::string quoted = nlohmann::json(label).dump();
    const std::size_t hit = text.find(quoted, base);
    if (hit != std::string::npos) return hit;
  }
  return base;
}

struct SchemaError {
  std::string key;
  std::string label;
  std::string message;
};

Poset FromJsonOrSchemaError(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError{"", "", "poset must be a JSON object"};
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw SchemaError{"", "", "missing array \"elements\""};
  }
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw SchemaError{"elements", "", "element labels must be strings"};
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> generators;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw SchemaError{"relations", "", "\"relations\" must be an array"};
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string()) {
        throw SchemaError{"relations", "", "each relation must be a pair of labels"};
      }
      generators.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  }
  std::map<std::string, int> seen;
  for (const auto& l : labels) {
    if (++seen[l] == 2) throw SchemaError{"elements", l, "duplicate label '" + l + "'"};
  }
  for (const auto& [lo, hi] : generators) {
    for (const auto& l : {lo, hi}) {
      if (!seen.count(l)) throw SchemaError{"relations", l, "unknown label '" + l + "'"};
    }
  }
  try {
    return BuildPoset(labels, generators);
  } catch (const Error& e) {
    throw SchemaError{"relations", "", e.what()};
  }
}

}  // namespace

Poset PosetFromJson(const nlohmann::json& j) {
  try {
    return FromJsonOrSchemaError(j);
  } catch (const SchemaError& e) {
    throw InputError("<json>", 1, 1, e.message);
  }
}

Poset ParsePosetJson(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = LineColumn(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    // Strip the library prefix "[json.exception.parse_error.101] ".
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw InputError(source, line, column, what);
  }
  try {
    return FromJsonOrSchemaError(j);
  } catch (const SchemaError& e) {
    const auto [line, column] = LineColumn(text, Locate(text, e.key, e.label));
    throw InputError(source, line, column, e.message);
  }
}

nlohmann::json PosetToJson(const Poset& p) {
  nlohmann::json j;
  j["elements"] = p.labels();
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& [x, y] : p.cover_pairs()) rel.push_back({p.label(x), p.label(y)});
  j["relations"] = std::move(rel);
  return j;
}

std::string ToDot(const Poset& p, const std::string& graph_name) {
  std::ostringstream out;
  auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
  out << "digraph " << quote(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  out << "  edge [arrowhead=none];\n";
  for (Index x = 0; x < p.size(); ++x) out << "  n" << x << " [label=" << quote(p.label(x)) << "];\n";
  std::map<std::size_t, std::vector<Index>> levels;
  for (Index x = 0; x < p.size(); ++x) levels[p.height(x)].push_back(x);
  for (const auto& [h, members] : levels) {
    out << "  { rank=same;";
    for (Index x : members) out << " n" << x << ";";
    out << " }  // height " << h << "\n";
  }
  for (const auto& [x, y] : p.cover_pairs()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json IsoToJson(const Poset& p, const Poset& q, const PosetIso& iso) {
  nlohmann::json map = nlohmann::json::object();
  for (Index x = 0; x < p.size(); ++x) map[p.label(x)] = q.label(iso.forward[x]);
  return map;
}

nlohmann::json MeetJoinToJson(const Poset& p, const MeetJoinTable& table) {
  nlohmann::json j;
  j["complete"] = table.complete();
  nlohmann::json meet = nlohmann::json::array(), join = nlohmann::json::array();
  for (Index x = 0; x < p.size(); ++x) {
    nlohmann::json mrow = nlohmann::json::array(), jrow = nlohmann::json::array();
    for (Index y = 0; y < p.size(); ++y) {
      auto m = table.meet(x, y);
      auto v = table.join(x, y);
      mrow.push_back(m ? nlohmann::json(p.label(*m)) : nlohmann::json(nullptr));
      jrow.push_back(v ? nlohmann::json(p.label(*v)) : nlohmann::json(nullptr));
    }
    meet.push_back(std::move(mrow));
    join.push_back(std::move(jrow));
  }
  j["elements"] = p.labels();
  j["meet"] = std::move(meet);
  j["join"] = std::move(join);
  return j;
}

nlohmann::json DistributivityToJson(const Poset& p, const DistributivityReport& report) {
  nlohmann::json j;
  j["lattice"] = report.is_lattice;
  j["distributive"] = report.is_distributive;
  if (report.counterexample) {
    const auto& t = *report.counterexample;
    j["counterexample"] = {p.label(t[0]), p.label(t[1]), p.label(t[2])};
  }
  if (report.is_distributive) {
    nlohmann::json irr = nlohmann::json::array();
    for (Index x : report.join_irreducibles) irr.push_back(p.label(x));
    j["join_irreducibles"] = std::move(irr);
    j["birkhoff"] = IsoToJson(p, report.birkhoff_target->poset, *report.birkhoff);
  }
  return j;
}

}  // namespace posetforge
