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

// Registry of named verification checks. Universal statements are checked by
// exhaustion up to the caps below; existential ones (isomorphisms) carry the
// witness map in the certificate.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetforge/minuscule.hpp"
#include "posetforge/poset.hpp"

namespace posetforge {

struct Caps {
  int ab = 4;        // grid sides a, b
  int n = 6;         // spin family J([n] x [2])
  int m = 5;         // natural family J^m([2] x [2])
  int root_n = 7;    // type A_{n-1} root posets
  int corpus = 6;    // all posets with at most this many elements

  friend bool operator==(const Caps&, const Caps&) = default;
};

// Applies "key=value" overrides (keys: ab, n, m, root_n, corpus). Throws
// kBadParameters for unknown keys, malformed values, or values above the
// hard limits (ab 6, n 10, m 8, root_n 8, corpus 6).
Caps ApplyCapOverrides(Caps caps, const std::map<std::string, std::string>& overrides);
// Comma-separated "key=value" list, as in the POSETFORGE_CAPS variable.
std::map<std::string, std::string> ParseCapList(const std::string& text);
// Defaults overridden by POSETFORGE_CAPS when set.
Caps CapsFromEnvironment();

struct CheckContext {
  Caps caps;
  // Builds the minuscule posets the checks inspect; replaceable for fault
  // injection.
  std::function<Poset(const MinusculeKind&)> minuscule = MinusculePoset;
};

struct CheckReport {
  std::string check_id;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = false;
  std::string summary;         // one line
  std::string exhaustion;      // what was enumerated, for universal claims
  nlohmann::json certificate = nlohmann::json::object();
  double elapsed_seconds = 0.0;
};

struct CheckInfo {
  std::string id;
  std::string description;
  std::function<void(const CheckContext&, CheckReport&)> run;
};

const std::vector<CheckInfo>& CheckRegistry();

// Throws kUnknownCheck. Exceptions raised inside the check become failures.
CheckReport RunCheck(const std::string& check_id, const CheckContext& ctx,
                     const std::map<std::string, std::string>& params = {});
// Every registered check, in registry order. Checks may run concurrently.
std::vector<CheckReport> RunAll(const CheckContext& ctx);

nlohmann::json ReportToJson(const CheckReport& report);

}  // namespace posetforge
