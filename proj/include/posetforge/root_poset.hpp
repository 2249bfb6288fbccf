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

// Positive roots of type A_{n-1}: [i,j] for 1 <= i < j <= n, with covers
// [i,j] < [i,j+1] and [i,j] < [i-1,j] (so [i,j] <= [l,m] iff l <= i and
// j <= m). Simple roots [t,t+1] are minimal, [1,n] is the maximum.

#pragma once

#include <string>
#include <vector>

#include "posetforge/poset.hpp"

namespace posetforge {

struct Root {
  int i = 1, j = 2;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string RootLabel(const Root& r);

// Element order: by j - i, then by i. Throws kBadParameters for n < 2.
std::vector<Root> PositiveRoots(int n);
Poset TypeARootPoset(int n);

// Roots of `antichain` (indices into PositiveRoots(n)).
std::vector<Root> RootsOf(int n, const Antichain& antichain);
Antichain AntichainOfRoots(int n, const std::vector<Root>& roots);

// The size-(n-1-k) antichain whose left endpoints are [n-1] minus
// {j_t - 1} and whose right endpoints are {2..n} minus {i_t + 1}, both
// sorted and paired positionally. The result is validated; throws
// kNotAnAntichain on bad input or an invalid image.
std::vector<Root> PanyushevStar(int n, const std::vector<Root>& antichain);
Antichain PanyushevStar(int n, const Antichain& antichain);

// |A_k| for k = 0..n-1.
std::vector<std::size_t> NarayanaTable(int n);

// "[1,2],[2,3]" or "[1,2] [2,3]"; "" is the empty antichain.
std::vector<Root> ParseRoots(const std::string& text);

}  // namespace posetforge
