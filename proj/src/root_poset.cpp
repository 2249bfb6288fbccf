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

#include "posetforge/root_poset.hpp"

#include <algorithm>
#include <regex>

namespace posetforge {

std::string RootLabel(const Root& r) {
  return "[" + std::to_string(r.i) + "," + std::to_string(r.j) + "]";
}

std::vector<Root> PositiveRoots(int n) {
  if (n < 2) throw Error(ErrorCode::kBadParameters, "root poset needs n >= 2");
  std::vector<Root> out;
  for (int len = 1; len < n; ++len) {
    for (int i = 1; i + len <= n; ++i) out.push_back(Root{i, i + len});
  }
  return out;
}

Poset TypeARootPoset(int n) {
  const auto roots = PositiveRoots(n);
  std::vector<std::string> labels;
  for (const Root& r : roots) labels.push_back(RootLabel(r));
  std::vector<std::pair<std::string, std::string>> covers;
  for (const Root& r : roots) {
    if (r.j + 1 <= n) covers.emplace_back(RootLabel(r), RootLabel(Root{r.i, r.j + 1}));
    if (r.i - 1 >= 1) covers.emplace_back(RootLabel(r), RootLabel(Root{r.i - 1, r.j}));
  }
  return BuildPoset(labels, covers);
}

namespace {

Index RootIndex(int n, const Root& r) {
  if (r.i < 1 || r.j > n || r.i >= r.j) {
    throw Error(ErrorCode::kNotAnAntichain, RootLabel(r) + " is not a positive root for n=" +
                                                std::to_string(n));
  }
  // Roots of length len start after sum_{l < len} (n - l) entries.
  const int len = r.j - r.i;
  const int before = (len - 1) * n - (len - 1) * len / 2;
  return static_cast<Index>(before + r.i - 1);
}

bool RootLess(const Root& x, const Root& y) {
  return !(x == y) && y.i <= x.i && x.j <= y.j;
}

void RequireRootAntichain(int n, const std::vector<Root>& roots, const char* what) {
  for (std::size_t s = 0; s < roots.size(); ++s) {
    RootIndex(n, roots[s]);
    for (std::size_t t = 0; t < roots.size(); ++t) {
      if (s != t && (roots[s] == roots[t] || RootLess(roots[s], roots[t]))) {
        throw Error(ErrorCode::kNotAnAntichain, std::string(what) + ": " +
                                                    RootLabel(roots[s]) + " and " +
                                                    RootLabel(roots[t]) + " are comparable");
      }
    }
  }
}

}  // namespace

std::vector<Root> RootsOf(int n, const Antichain& antichain) {
  const auto roots = PositiveRoots(n);
  std::vector<Root> out;
  for (Index v : antichain.members) {
    if (v >= roots.size()) throw Error(ErrorCode::kNotAnAntichain, "index outside root poset");
    out.push_back(roots[v]);
  }
  return out;
}

Antichain AntichainOfRoots(int n, const std::vector<Root>& roots) {
  Antichain out;
  for (const Root& r : roots) out.members.push_back(RootIndex(n, r));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<Root> PanyushevStar(int n, const std::vector<Root>& antichain) {
  RequireRootAntichain(n, antichain, "input");
  std::vector<int> lefts, rights;
  for (int t = 1; t <= n - 1; ++t) lefts.push_back(t);
  for (int t = 2; t <= n; ++t) rights.push_back(t);
  for (const Root& r : antichain) {
    std::erase(lefts, r.j - 1);
    std::erase(rights, r.i + 1);
  }
  const std::size_t expected = static_cast<std::size_t>(n - 1) - antichain.size();
  if (lefts.size() != expected || rights.size() != expected) {
    throw Error(ErrorCode::kNotAnAntichain, "complement sets have the wrong size");
  }
  std::vector<Root> out;
  for (std::size_t t = 0; t < expected; ++t) {
    if (lefts[t] >= rights[t]) {
      throw Error(ErrorCode::kNotAnAntichain, "paired endpoints do not form a root");
    }
    out.push_back(Root{lefts[t], rights[t]});
  }
  RequireRootAntichain(n, out, "image");
  return out;
}

Antichain PanyushevStar(int n, const Antichain& antichain) {
  return AntichainOfRoots(n, PanyushevStar(n, RootsOf(n, antichain)));
}

std::vector<std::size_t> NarayanaTable(int n) {
  const Poset p = TypeARootPoset(n);
  std::vector<std::size_t> table;
  for (int k = 0; k <= n - 1; ++k) table.push_back(AntichainsOfSize(p, k).size());
  return table;
}

std::vector<Root> ParseRoots(const std::string& text) {
  static const std::regex kRoot(R"(\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
  static const std::regex kSeparators(R"([\s,;]*)");
  std::vector<Root> out;
  auto it = std::sregex_iterator(text.begin(), text.end(), kRoot);
  std::size_t consumed = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const std::string gap = text.substr(consumed, m.position() - consumed);
    if (!std::regex_match(gap, kSeparators)) {
      throw Error(ErrorCode::kBadParameters, "malformed root list '" + text + "'");
    }
    const Root r{std::stoi(m[1]), std::stoi(m[2])};
    if (r.i < 1 || r.j <= r.i) {
      throw Error(ErrorCode::kBadParameters, "root " + RootLabel(r) + " needs 1 <= i < j");
    }
    out.push_back(r);
    consumed = m.position() + m.length();
  }
  if (!std::regex_match(text.substr(consumed), kSeparators)) {
    throw Error(ErrorCode::kBadParameters, "malformed root list '" + text + "'");
  }
  return out;
}

}  // namespace posetforge
