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

#include "posetforge/minuscule.hpp"

#include <algorithm>

#include "posetforge/sequence.hpp"

namespace posetforge {

Poset IterateJ(const Poset& p, int m, std::size_t cap) {
  if (m < 0) throw Error(ErrorCode::kBadParameters, "IterateJ: negative exponent");
  Poset cur = p;
  for (int i = 0; i < m; ++i) cur = IdealsPoset(cur, cap);
  return cur;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequirePositive(int v, const char* what) {
  if (v < 1) {
    throw Error(ErrorCode::kBadParameters,
                std::string(what) + " must be positive, got " + std::to_string(v));
  }
}

}  // namespace

Poset MinusculePoset(const MinusculeKind& kind) {
  return std::visit(
      Overloaded{
          [](const minuscule::Grid& g) {
            RequirePositive(g.a, "grid a");
            RequirePositive(g.b, "grid b");
            return Grid(g.a, g.b);
          },
          [](const minuscule::SpinD& s) {
            RequirePositive(s.n, "spin n");
            return IterateJ(Grid(s.n, 2), 1);
          },
          [](const minuscule::NaturalD& d) {
            if (d.m < 0) throw Error(ErrorCode::kBadParameters, "natural m must be >= 0");
            return IterateJ(Grid(2, 2), d.m);
          },
          [](const minuscule::E6&) { return IterateJ(Grid(2, 3), 2); },
          [](const minuscule::E7&) { return IterateJ(Grid(2, 3), 3); },
      },
      kind);
}

std::size_t ExpectedWidth(const MinusculeKind& kind) {
  return std::visit(
      Overloaded{
          [](const minuscule::Grid& g) { return static_cast<std::size_t>(std::min(g.a, g.b)); },
          [](const minuscule::SpinD& s) { return static_cast<std::size_t>((s.n + 2) / 2); },
          [](const minuscule::NaturalD&) { return std::size_t{2}; },
          [](const minuscule::E6&) { return std::size_t{2}; },
          [](const minuscule::E7&) { return std::size_t{3}; },
      },
      kind);
}

std::string KindName(const MinusculeKind& kind) {
  return std::visit(
      Overloaded{
          [](const minuscule::Grid& g) {
            return "grid(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
          },
          [](const minuscule::SpinD& s) { return "spin(" + std::to_string(s.n) + ")"; },
          [](const minuscule::NaturalD& d) { return "natural(" + std::to_string(d.m) + ")"; },
          [](const minuscule::E6&) { return std::string("e6"); },
          [](const minuscule::E7&) { return std::string("e7"); },
      },
      kind);
}

MinusculeKind ParseKind(const std::string& name, const std::vector<int>& params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorCode::kBadParameters, "minuscule kind '" + name + "' takes " +
                                                 std::to_string(count) + " parameter(s), got " +
                                                 std::to_string(params.size()));
    }
  };
  if (name == "grid") {
    expect(2);
    return minuscule::Grid{params[0], params[1]};
  }
  if (name == "spin") {
    expect(1);
    return minuscule::SpinD{params[0]};
  }
  if (name == "natural") {
    expect(1);
    return minuscule::NaturalD{params[0]};
  }
  if (name == "e6") {
    expect(0);
    return minuscule::E6{};
  }
  if (name == "e7") {
    expect(0);
    return minuscule::E7{};
  }
  throw Error(ErrorCode::kBadParameters,
              "unknown minuscule kind '" + name + "' (grid, spin, natural, e6, e7)");
}

std::vector<MinusculeKind> MinusculeCorpus(int max_ab, int max_n, int max_m) {
  std::vector<MinusculeKind> out;
  for (int a = 1; a <= max_ab; ++a) {
    for (int b = 1; b <= max_ab; ++b) out.emplace_back(minuscule::Grid{a, b});
  }
  for (int n = 1; n <= max_n; ++n) out.emplace_back(minuscule::SpinD{n});
  for (int m = 0; m <= max_m; ++m) out.emplace_back(minuscule::NaturalD{m});
  out.emplace_back(minuscule::E6{});
  out.emplace_back(minuscule::E7{});
  return out;
}

}  // namespace posetforge
