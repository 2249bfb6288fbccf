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

#include "posetforge/poset.hpp"

#include <algorithm>
#include <numeric>

#include "posetforge/kernels.hpp"

namespace posetforge {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kNotAnIdeal: return "NotAnIdeal";
    case ErrorCode::kNotAnAntichain: return "NotAnAntichain";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kUnknownCheck: return "UnknownCheck";
  }
  return "Error";
}

bool Antichain::contains(Index x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

void CheckShape(const std::vector<std::string>& labels, const std::vector<Bitset>& rows) {
  if (rows.size() != labels.size()) {
    throw Error(ErrorCode::kBadParameters, "relation has " + std::to_string(rows.size()) +
                                               " rows for " + std::to_string(labels.size()) +
                                               " labels");
  }
  for (const Bitset& row : rows) {
    if (row.size() != labels.size()) {
      throw Error(ErrorCode::kBadParameters, "relation row has wrong width");
    }
  }
}

Bitset ToBitset(std::size_t n, std::span<const Index> members) {
  Bitset b(n);
  for (Index x : members) b.set(x);
  return b;
}

std::vector<Index> Members(const Bitset& b) {
  std::vector<Index> out;
  out.reserve(b.count());
  for (auto x = b.find_first(); x != Bitset::npos; x = b.find_next(x)) out.push_back(x);
  return out;
}

}  // namespace

Poset Poset::FromGenerators(std::vector<std::string> labels, std::vector<Bitset> relation) {
  CheckShape(labels, relation);
  kernels::TransitiveClosure(relation);
  for (Index x = 0; x < relation.size(); ++x) {
    if (relation[x][x]) {
      throw Error(ErrorCode::kCycleDetected,
                  "relation is not a partial order: cycle through '" + labels[x] + "'");
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(relation);
  p.Finalize();
  return p;
}

Poset Poset::FromStrictOrder(std::vector<std::string> labels, std::vector<Bitset> strict_lt) {
  CheckShape(labels, strict_lt);
  for (Index x = 0; x < strict_lt.size(); ++x) {
    if (strict_lt[x][x]) {
      throw Error(ErrorCode::kCycleDetected, "reflexive pair at '" + labels[x] + "'");
    }
    for (auto y = strict_lt[x].find_first(); y != Bitset::npos; y = strict_lt[x].find_next(y)) {
      if (strict_lt[y][x]) {
        throw Error(ErrorCode::kCycleDetected,
                    "'" + labels[x] + "' and '" + labels[y] + "' are mutually related");
      }
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(strict_lt);
  p.Finalize();
  return p;
}

void Poset::Finalize() {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (Index x = 0; x < n; ++x) {
    if (!index_.emplace(labels_[x], x).second) {
      throw Error(ErrorCode::kDuplicateLabel, "label '" + labels_[x] + "' appears twice");
    }
  }
  down_.assign(n, Bitset(n));
  for (Index x = 0; x < n; ++x) {
    for (auto y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) {
      down_[y].set(x);
    }
  }
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  covers_.clear();
  for (Index x = 0; x < n; ++x) {
    for (auto y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) {
      if (!up_[x].intersects(down_[y])) {
        covers_.emplace_back(x, y);
        upper_covers_[x].push_back(y);
        lower_covers_[y].push_back(x);
      }
    }
  }
  // |down(x)| strictly increases along the order, so sorting by it gives a
  // linear extension.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<std::size_t> down_count(n);
  for (Index x = 0; x < n; ++x) down_count[x] = down_[x].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return down_count[a] < down_count[b]; });
  height_.assign(n, 0);
  depth_.assign(n, 0);
  for (Index y : order) {
    for (Index x : lower_covers_[y]) height_[y] = std::max(height_[y], height_[x] + 1);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (Index z : upper_covers_[*it]) depth_[*it] = std::max(depth_[*it], depth_[z] + 1);
  }
}

std::optional<Index> Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Poset::covered_by(Index x, Index y) const {
  const auto& ups = upper_covers_[x];
  return std::find(ups.begin(), ups.end(), y) != ups.end();
}

std::optional<Index> Poset::minimum() const {
  for (Index x = 0; x < size(); ++x) {
    if (up_[x].count() + 1 == size()) return x;
  }
  return std::nullopt;
}

std::optional<Index> Poset::maximum() const {
  for (Index x = 0; x < size(); ++x) {
    if (down_[x].count() + 1 == size()) return x;
  }
  return std::nullopt;
}

Poset BuildPoset(const std::vector<std::string>& labels,
                 const std::vector<std::pair<std::string, std::string>>& generators) {
  std::unordered_map<std::string, Index> index;
  for (Index x = 0; x < labels.size(); ++x) {
    if (!index.emplace(labels[x], x).second) {
      throw Error(ErrorCode::kDuplicateLabel, "label '" + labels[x] + "' appears twice");
    }
  }
  std::vector<Bitset> rel(labels.size(), Bitset(labels.size()));
  for (const auto& [lo, hi] : generators) {
    auto a = index.find(lo);
    if (a == index.end()) throw Error(ErrorCode::kUnknownLabel, "unknown label '" + lo + "'");
    auto b = index.find(hi);
    if (b == index.end()) throw Error(ErrorCode::kUnknownLabel, "unknown label '" + hi + "'");
    rel[a->second].set(b->second);
  }
  return Poset::FromGenerators(labels, std::move(rel));
}

Poset Chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    for (Index j = i + 1; j < n; ++j) rel[i].set(j);
  }
  return Poset::FromStrictOrder(std::move(labels), std::move(rel));
}

Poset AntichainPoset(std::size_t n) {
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return Poset::FromStrictOrder(std::move(labels), std::vector<Bitset>(n, Bitset(n)));
}

std::vector<IndexPair> Covers(const Poset& p) { return p.cover_pairs(); }

Poset Product(const Poset& p, const Poset& q) {
  const std::size_t np = p.size(), nq = q.size(), n = np * nq;
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index a = 0; a < np; ++a) {
    for (Index b = 0; b < nq; ++b) {
      labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
      for (Index c = 0; c < np; ++c) {
        if (!p.leq(a, c)) continue;
        for (Index d = 0; d < nq; ++d) {
          if (q.leq(b, d) && (a != c || b != d)) rel[a * nq + b].set(c * nq + d);
        }
      }
    }
  }
  return Poset::FromStrictOrder(std::move(labels), std::move(rel));
}

Poset Induced(const Poset& p, std::span<const Index> elements) {
  const std::size_t n = elements.size();
  std::vector<std::string> labels;
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index i = 0; i < n; ++i) {
    labels.push_back(p.label(elements[i]));
    for (Index j = 0; j < n; ++j) {
      if (p.less(elements[i], elements[j])) rel[i].set(j);
    }
  }
  return Poset::FromStrictOrder(std::move(labels), std::move(rel));
}

bool IsAntichain(const Poset& p, std::span<const Index> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= p.size()) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (p.comparable(members[i], members[j])) return false;
    }
  }
  return true;
}

bool IsIdeal(const Poset& p, const Bitset& members) {
  if (members.size() != p.size()) return false;
  for (auto y = members.find_first(); y != Bitset::npos; y = members.find_next(y)) {
    if (!p.below(y).is_subset_of(members)) return false;
  }
  return true;
}

namespace {

// Extends `chosen` with indices from `allowed` (all larger than the last
// chosen one and incomparable to every chosen one).
template <typename Visit>
void AntichainDfs(const Poset& p, std::vector<Index>& chosen, const Bitset& allowed,
                  std::size_t target, Visit& visit) {
  if (chosen.size() == target) {
    visit(chosen);
    return;
  }
  if (allowed.count() < target - chosen.size()) return;
  for (auto x = allowed.find_first(); x != Bitset::npos; x = allowed.find_next(x)) {
    Bitset next = allowed;
    next &= ~p.above(x);
    next &= ~p.below(x);
    for (Index y = 0; y <= x; ++y) next.reset(y);
    chosen.push_back(x);
    AntichainDfs(p, chosen, next, target, visit);
    chosen.pop_back();
  }
}

template <typename Visit>
void AllAntichainsDfs(const Poset& p, std::vector<Index>& chosen, const Bitset& allowed,
                      Visit& visit) {
  visit(chosen);
  for (auto x = allowed.find_first(); x != Bitset::npos; x = allowed.find_next(x)) {
    Bitset next = allowed;
    next &= ~p.above(x);
    next &= ~p.below(x);
    for (Index y = 0; y <= x; ++y) next.reset(y);
    chosen.push_back(x);
    AllAntichainsDfs(p, chosen, next, visit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Antichain> AntichainsOfSize(const Poset& p, std::size_t k) {
  std::vector<Antichain> out;
  std::vector<Index> chosen;
  Bitset all(p.size());
  all.set();
  auto visit = [&](const std::vector<Index>& c) { out.push_back(Antichain{c}); };
  AntichainDfs(p, chosen, all, k, visit);
  return out;
}

std::vector<Antichain> AllAntichains(const Poset& p) {
  std::vector<Antichain> out;
  std::vector<Index> chosen;
  Bitset all(p.size());
  all.set();
  auto visit = [&](const std::vector<Index>& c) { out.push_back(Antichain{c}); };
  AllAntichainsDfs(p, chosen, all, visit);
  return out;
}

namespace {

bool Augment(const Poset& p, Index x, std::vector<char>& seen, std::vector<Index>& match_right) {
  const Bitset& ups = p.above(x);
  for (auto y = ups.find_first(); y != Bitset::npos; y = ups.find_next(y)) {
    if (seen[y]) continue;
    seen[y] = 1;
    if (match_right[y] == kNoElement || Augment(p, match_right[y], seen, match_right)) {
      match_right[y] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t Width(const Poset& p) {
  std::vector<Index> match_right(p.size(), kNoElement);
  std::size_t matched = 0;
  for (Index x = 0; x < p.size(); ++x) {
    std::vector<char> seen(p.size(), 0);
    if (Augment(p, x, seen, match_right)) ++matched;
  }
  return p.size() - matched;
}

Ideal IdealOf(const Poset& p, const Antichain& a) {
  Bitset members(p.size());
  for (Index x : a.members) {
    members |= p.below(x);
    members.set(x);
  }
  return Ideal{std::move(members)};
}

Antichain MaxElements(const Poset& p, const Ideal& ideal) {
  Antichain out;
  const Bitset& m = ideal.members;
  for (auto x = m.find_first(); x != Bitset::npos; x = m.find_next(x)) {
    if (!p.above(x).intersects(m)) out.members.push_back(x);
  }
  return out;
}

std::string AntichainLabel(const Poset& p, const Antichain& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (i) s += ",";
    s += p.label(a.members[i]);
  }
  return s + "}";
}

IdealLattice IdealsLattice(const Poset& p, std::size_t cap) {
  struct Entry {
    std::vector<Index> members;
    Antichain generators;
  };
  std::vector<Entry> entries;
  std::vector<Index> chosen;
  Bitset all(p.size());
  all.set();
  auto visit = [&](const std::vector<Index>& c) {
    if (entries.size() >= cap) {
      throw Error(ErrorCode::kSizeLimitExceeded,
                  "more than " + std::to_string(cap) + " ideals");
    }
    Antichain a{c};
    entries.push_back(Entry{Members(IdealOf(p, a).members), std::move(a)});
  };
  AllAntichainsDfs(p, chosen, all, visit);
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });

  IdealLattice out;
  std::vector<std::string> labels;
  labels.reserve(entries.size());
  out.ideals.reserve(entries.size());
  for (const Entry& e : entries) {
    std::string label = AntichainLabel(p, e.generators);
    label.front() = '<';
    label.back() = '>';
    labels.push_back(std::move(label));
    out.ideals.push_back(Ideal{ToBitset(p.size(), e.members)});
  }
  std::vector<Bitset> sets;
  sets.reserve(out.ideals.size());
  for (const Ideal& i : out.ideals) sets.push_back(i.members);
  out.poset = Poset::FromStrictOrder(std::move(labels), kernels::StrictSubsetRelation(sets));
  return out;
}

Poset IdealsPoset(const Poset& p, std::size_t cap) { return IdealsLattice(p, cap).poset; }

bool VerifyIsomorphism(const Poset& p, const Poset& q, std::span<const Index> forward) {
  if (p.size() != q.size() || forward.size() != p.size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (Index y : forward) {
    if (y >= q.size() || hit[y]) return false;
    hit[y] = 1;
  }
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < p.size(); ++y) {
      if (p.less(x, y) != q.less(forward[x], forward[y])) return false;
    }
  }
  return true;
}

}  // namespace posetforge
