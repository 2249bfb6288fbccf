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

// Exhaustive small-poset corpus. Posets on n <= 6 elements are generated as
// naturally labelled strict orders (x < y only if x < y as integers) and
// deduplicated by a brute-force canonical code: the minimum, over all
// relabellings, of the n x n relation matrix read as a bit string. The
// canonical code is independent of FindIsomorphism, so the two can be
// cross-checked.

#pragma once

#include <cstdint>
#include <vector>

#include "posetforge/poset.hpp"

namespace posetforge {

inline constexpr std::size_t kMaxCanonicalElements = 7;
inline constexpr std::size_t kMaxCorpusElements = 6;

// Throws kSizeLimitExceeded above kMaxCanonicalElements.
std::uint64_t CanonicalCode(const Poset& p);

// One representative per isomorphism class on exactly n elements, sorted by
// canonical code. Labels are "1".."n". Throws kSizeLimitExceeded for
// n > kMaxCorpusElements.
std::vector<Poset> PosetsUpToIsomorphism(std::size_t n);
// All classes with 0..max_n elements.
std::vector<Poset> PosetCorpus(std::size_t max_n);

}  // namespace posetforge
