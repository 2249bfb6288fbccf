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

// Finite posets over canonical indices 0..n-1, stored as a dense strict-order
// matrix (one bit row per element). Everything else in the library is built
// on top of this type.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posetforge/error.hpp"

namespace posetforge {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Index = std::size_t;
using IndexPair = std::pair<Index, Index>;

// Sorted, duplicate-free member indices of a host poset.
struct Antichain {
  std::vector<Index> members;

  std::size_t size() const { return members.size(); }
  bool contains(Index x) const;
  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend auto operator<=>(const Antichain&, const Antichain&) = default;
};

// Downward-closed subset of a host poset.
struct Ideal {
  Bitset members;

  std::size_t size() const { return members.count(); }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

class Poset {
 public:
  Poset() = default;

  // Labels plus an arbitrary relation; the strict order is its transitive
  // closure. Throws kCycleDetected if the closure is not irreflexive.
  static Poset FromGenerators(std::vector<std::string> labels,
                              std::vector<Bitset> relation);

  // Labels plus a relation that is already a strict partial order (callers
  // such as componentwise or containment orders guarantee transitivity).
  // Irreflexivity and antisymmetry are still checked.
  static Poset FromStrictOrder(std::vector<std::string> labels,
                               std::vector<Bitset> strict_lt);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(Index x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> index_of(const std::string& label) const;

  bool less(Index x, Index y) const { return up_[x][y]; }
  bool leq(Index x, Index y) const { return x == y || up_[x][y]; }
  bool comparable(Index x, Index y) const {
    return x == y || up_[x][y] || up_[y][x];
  }

  // Strict up-set / down-set of x.
  const Bitset& above(Index x) const { return up_[x]; }
  const Bitset& below(Index x) const { return down_[x]; }

  const std::vector<IndexPair>& cover_pairs() const { return covers_; }
  const std::vector<Index>& upper_covers(Index x) const { return upper_covers_[x]; }
  const std::vector<Index>& lower_covers(Index x) const { return lower_covers_[x]; }
  bool covered_by(Index x, Index y) const;

  // Length of the longest chain ending (resp. starting) at x.
  std::size_t height(Index x) const { return height_[x]; }
  std::size_t depth(Index x) const { return depth_[x]; }

  std::optional<Index> minimum() const;
  std::optional<Index> maximum() const;

 private:
  void Finalize();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<IndexPair> covers_;
  std::vector<std::vector<Index>> upper_covers_;
  std::vector<std::vector<Index>> lower_covers_;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> depth_;
};

// Order-isomorphism witness: forward[x] is the image of x in the target.
struct PosetIso {
  std::vector<Index> forward;
  std::vector<Index> backward;
};

inline constexpr std::size_t kDefaultIdealCap = 1'000'000;
inline constexpr std::size_t kDefaultIsoCap = 200;

Poset BuildPoset(const std::vector<std::string>& labels,
                 const std::vector<std::pair<std::string, std::string>>& generators);

// The chain 1 < 2 < ... < n (labels "1".."n"); n = 0 gives the empty poset.
Poset Chain(std::size_t n);
// n pairwise incomparable elements labelled "1".."n".
Poset AntichainPoset(std::size_t n);

// Covering pairs (x, y) sorted by (x, y).
std::vector<IndexPair> Covers(const Poset& p);

// Element (p, q) sits at index p * |Q| + q and is labelled "(lp,lq)".
Poset Product(const Poset& p, const Poset& q);

// Subposet on the given (sorted) indices, labels kept.
Poset Induced(const Poset& p, std::span<const Index> elements);

struct IdealLattice {
  std::vector<Ideal> ideals;  // ideals[i] is element i of `poset`
  Poset poset;
};

// J(P) ordered by containment. Ideals are listed by increasing size, then by
// sorted member list; each is labelled "<m1,m2,...>" with its maximal
// elements.
IdealLattice IdealsLattice(const Poset& p, std::size_t cap = kDefaultIdealCap);
Poset IdealsPoset(const Poset& p, std::size_t cap = kDefaultIdealCap);

bool IsAntichain(const Poset& p, std::span<const Index> members);
bool IsIdeal(const Poset& p, const Bitset& members);

// Size-k antichains in lexicographic order of their sorted member lists.
std::vector<Antichain> AntichainsOfSize(const Poset& p, std::size_t k);
std::vector<Antichain> AllAntichains(const Poset& p);

// Maximum antichain size, computed through a maximum bipartite matching on
// the comparability relation (n minus the minimum chain cover).
std::size_t Width(const Poset& p);

Ideal IdealOf(const Poset& p, const Antichain& a);
Antichain MaxElements(const Poset& p, const Ideal& ideal);

std::string AntichainLabel(const Poset& p, const Antichain& a);

// True iff `forward` is a bijection P -> Q with x < y <=> f(x) < f(y).
bool VerifyIsomorphism(const Poset& p, const Poset& q,
                       std::span<const Index> forward);

std::optional<PosetIso> FindIsomorphism(const Poset& p, const Poset& q,
                                        std::size_t cap = kDefaultIsoCap);

}  // namespace posetforge
