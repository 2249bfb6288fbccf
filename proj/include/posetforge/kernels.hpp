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

// Data-parallel inner loops of the library. Each kernel has an OpenMP version
// in `posetforge::kernels` and a plain serial version in
// `posetforge::kernels::serial`; the serial versions are the reference the
// tests compare against and the baseline for bench/kernels_bench.
//
// All parallel kernels produce output identical to the serial ones,
// independent of the thread count.

#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "posetforge/poset.hpp"

namespace posetforge {

inline constexpr Index kNoElement = std::numeric_limits<Index>::max();

struct AntichainHash {
  std::size_t operator()(const std::vector<Index>& v) const noexcept;
};
using AntichainIndex = std::unordered_map<std::vector<Index>, Index, AntichainHash>;

// Flat n x n tables; entry [x * n + y] is kNoElement when undefined.
struct MeetJoinRaw {
  std::size_t n = 0;
  std::vector<Index> meet;
  std::vector<Index> join;
};

using Triple = std::array<Index, 3>;

namespace kernels {

// Warshall closure over bit rows: rows[i][j] means i -> j.
void TransitiveClosure(std::vector<Bitset>& rows);

// rows[i][j] iff sets[i] is a strict subset of sets[j].
std::vector<Bitset> StrictSubsetRelation(std::span<const Bitset> sets);

MeetJoinRaw MeetJoin(const Poset& p);

// First (lexicographic) triple violating x ^ (y v z) == (x ^ y) v (x ^ z);
// requires total tables.
std::optional<Triple> FirstNonDistributiveTriple(const MeetJoinRaw& t);

// For each antichain A, the indices of antichains A \ {a} u {b} with a
// covered by b. Output lists are sorted.
std::vector<std::vector<Index>> CoverSwapEdges(const Poset& p,
                                               std::span<const Antichain> antichains,
                                               const AntichainIndex& lookup);

namespace serial {

void TransitiveClosure(std::vector<Bitset>& rows);
std::vector<Bitset> StrictSubsetRelation(std::span<const Bitset> sets);
MeetJoinRaw MeetJoin(const Poset& p);
std::optional<Triple> FirstNonDistributiveTriple(const MeetJoinRaw& t);
std::vector<std::vector<Index>> CoverSwapEdges(const Poset& p,
                                               std::span<const Antichain> antichains,
                                               const AntichainIndex& lookup);

}  // namespace serial
}  // namespace kernels
}  // namespace posetforge
