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

#include "posetforge/kernels.hpp"

#include <algorithm>
#include <cstdint>

#include <boost/container_hash/hash.hpp>

namespace posetforge {

std::size_t AntichainHash::operator()(const std::vector<Index>& v) const noexcept {
  return boost::hash_range(v.begin(), v.end());
}

namespace {

// Unique maximal element of `set`, or kNoElement. In a finite poset a unique
// maximal element of a set is its maximum.
Index UniqueMaximal(const Poset& p, const Bitset& set) {
  Index found = kNoElement;
  for (auto m = set.find_first(); m != Bitset::npos; m = set.find_next(m)) {
    if (!p.above(m).intersects(set)) {
      if (found != kNoElement) return kNoElement;
      found = m;
    }
  }
  return found;
}

Index UniqueMinimal(const Poset& p, const Bitset& set) {
  Index found = kNoElement;
  for (auto m = set.find_first(); m != Bitset::npos; m = set.find_next(m)) {
    if (!p.below(m).intersects(set)) {
      if (found != kNoElement) return kNoElement;
      found = m;
    }
  }
  return found;
}

void MeetJoinRow(const Poset& p, Index x, MeetJoinRaw& t) {
  const std::size_t n = p.size();
  Bitset down_x = p.below(x);
  down_x.set(x);
  Bitset up_x = p.above(x);
  up_x.set(x);
  for (Index y = 0; y < n; ++y) {
    Bitset lower = p.below(y);
    lower.set(y);
    lower &= down_x;
    Bitset upper = p.above(y);
    upper.set(y);
    upper &= up_x;
    t.meet[x * n + y] = UniqueMaximal(p, lower);
    t.join[x * n + y] = UniqueMinimal(p, upper);
  }
}

// First failing (y, z) for a fixed x, or nullopt.
std::optional<Triple> FirstFailureAt(const MeetJoinRaw& t, Index x) {
  const std::size_t n = t.n;
  for (Index y = 0; y < n; ++y) {
    const Index xy = t.meet[x * n + y];
    for (Index z = 0; z < n; ++z) {
      const Index lhs = t.meet[x * n + t.join[y * n + z]];
      const Index rhs = t.join[xy * n + t.meet[x * n + z]];
      if (lhs != rhs) return Triple{x, y, z};
    }
  }
  return std::nullopt;
}

std::vector<Index> SwapEdgesFor(const Poset& p, const Antichain& a,
                                const AntichainIndex& lookup) {
  std::vector<Index> out;
  std::vector<Index> swapped;
  for (std::size_t pos = 0; pos < a.members.size(); ++pos) {
    const Index removed = a.members[pos];
    for (Index added : p.upper_covers(removed)) {
      bool ok = true;
      for (std::size_t other = 0; other < a.members.size() && ok; ++other) {
        if (other != pos && p.comparable(added, a.members[other])) ok = false;
      }
      if (!ok) continue;
      swapped = a.members;
      swapped[pos] = added;
      std::sort(swapped.begin(), swapped.end());
      auto it = lookup.find(swapped);
      if (it != lookup.end()) out.push_back(it->second);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MeetJoinRaw EmptyTables(std::size_t n) {
  MeetJoinRaw t;
  t.n = n;
  t.meet.assign(n * n, kNoElement);
  t.join.assign(n * n, kNoElement);
  return t;
}

}  // namespace

namespace kernels {

void TransitiveClosure(std::vector<Bitset>& rows) {
  const auto n = static_cast<std::int64_t>(rows.size());
  for (std::int64_t k = 0; k < n; ++k) {
    const Bitset& pivot = rows[k];
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      if (i != k && rows[i][k]) rows[i] |= pivot;
    }
  }
}

std::vector<Bitset> StrictSubsetRelation(std::span<const Bitset> sets) {
  const auto n = static_cast<std::int64_t>(sets.size());
  std::vector<Bitset> rows(sets.size(), Bitset(sets.size()));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      if (i != j && sets[i].is_proper_subset_of(sets[j])) rows[i].set(j);
    }
  }
  return rows;
}

MeetJoinRaw MeetJoin(const Poset& p) {
  MeetJoinRaw t = EmptyTables(p.size());
  const auto n = static_cast<std::int64_t>(p.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t x = 0; x < n; ++x) MeetJoinRow(p, static_cast<Index>(x), t);
  return t;
}

std::optional<Triple> FirstNonDistributiveTriple(const MeetJoinRaw& t) {
  const auto n = static_cast<std::int64_t>(t.n);
  std::int64_t first_x = n;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first_x)
  for (std::int64_t x = 0; x < n; ++x) {
    if (x < first_x && FirstFailureAt(t, static_cast<Index>(x))) first_x = x;
  }
  if (first_x == n) return std::nullopt;
  return FirstFailureAt(t, static_cast<Index>(first_x));
}

std::vector<std::vector<Index>> CoverSwapEdges(const Poset& p,
                                               std::span<const Antichain> antichains,
                                               const AntichainIndex& lookup) {
  std::vector<std::vector<Index>> edges(antichains.size());
  const auto n = static_cast<std::int64_t>(antichains.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) edges[i] = SwapEdgesFor(p, antichains[i], lookup);
  return edges;
}

namespace serial {

void TransitiveClosure(std::vector<Bitset>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && rows[i][k]) rows[i] |= rows[k];
    }
  }
}

std::vector<Bitset> StrictSubsetRelation(std::span<const Bitset> sets) {
  std::vector<Bitset> rows(sets.size(), Bitset(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].is_proper_subset_of(sets[j])) rows[i].set(j);
    }
  }
  return rows;
}

MeetJoinRaw MeetJoin(const Poset& p) {
  MeetJoinRaw t = EmptyTables(p.size());
  for (Index x = 0; x < p.size(); ++x) MeetJoinRow(p, x, t);
  return t;
}

std::optional<Triple> FirstNonDistributiveTriple(const MeetJoinRaw& t) {
  for (Index x = 0; x < t.n; ++x) {
    if (auto bad = FirstFailureAt(t, x)) return bad;
  }
  return std::nullopt;
}

std::vector<std::vector<Index>> CoverSwapEdges(const Poset& p,
                                               std::span<const Antichain> antichains,
                                               const AntichainIndex& lookup) {
  std::vector<std::vector<Index>> edges;
  edges.reserve(antichains.size());
  for (const Antichain& a : antichains) edges.push_back(SwapEdgesFor(p, a, lookup));
  return edges;
}

}  // namespace serial
}  // namespace kernels
}  // namespace posetforge
