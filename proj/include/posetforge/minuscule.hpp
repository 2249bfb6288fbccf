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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "posetforge/poset.hpp"

namespace posetforge {

namespace minuscule {
struct Grid {
  int a = 1, b = 1;
};
// J([n] x [2])
struct SpinD {
  int n = 1;
};
// J^m([2] x [2])
struct NaturalD {
  int m = 0;
};
// J^2([2] x [3])
struct E6 {};
// J^3([2] x [3])
struct E7 {};
}  // namespace minuscule

using MinusculeKind = std::variant<minuscule::Grid, minuscule::SpinD, minuscule::NaturalD,
                                   minuscule::E6, minuscule::E7>;

// J applied m times; m = 0 returns a copy of P.
Poset IterateJ(const Poset& p, int m, std::size_t cap = kDefaultIdealCap);

// Throws kBadParameters for a, b, n < 1 or m < 0.
Poset MinusculePoset(const MinusculeKind& kind);
std::size_t ExpectedWidth(const MinusculeKind& kind);
std::string KindName(const MinusculeKind& kind);

// "grid 3 4", "spin 5", "natural 2", "e6", "e7".
MinusculeKind ParseKind(const std::string& name, const std::vector<int>& params);

// Every kind with a, b <= max_ab, n <= max_n, m <= max_m, plus E6 and E7.
std::vector<MinusculeKind> MinusculeCorpus(int max_ab, int max_n, int max_m);

}  // namespace posetforge
