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

// Poset isomorphism by signature refinement followed by backtracking.
//
// Both posets are coloured jointly, so equal colours mean equal invariants.
// Initial colours are (height, depth, |up-set|, |down-set|, #upper covers,
// #lower covers); each refinement round appends the sorted colour multisets
// of upper and lower covers, until the partition stops splitting. The search
// then assigns elements of P in an order that keeps each new element
// adjacent (in the Hasse diagram) to already placed ones, and only tries
// same-coloured targets that agree with every earlier assignment on both
// strict order directions.

#include <algorithm>
#include <map>
#include <tuple>

#include "posetforge/kernels.hpp"
#include "posetforge/poset.hpp"

namespace posetforge {
namespace {

using Color = std::size_t;

class JointColoring {
 public:
  JointColoring(const Poset& p, const Poset& q) : p_(p), q_(q) {}

  void Run() {
    std::map<std::vector<std::size_t>, Color> ids;
    auto initial = [&](const Poset& s, Index x) {
      std::vector<std::size_t> key = {s.height(x),           s.depth(x),
                                      s.above(x).count(),    s.below(x).count(),
                                      s.upper_covers(x).size(), s.lower_covers(x).size()};
      return ids.emplace(key, ids.size()).first->second;
    };
    for (Index x = 0; x < p_.size(); ++x) cp_.push_back(initial(p_, x));
    for (Index x = 0; x < q_.size(); ++x) cq_.push_back(initial(q_, x));
    std::size_t classes = ids.size();
    while (true) {
      std::map<std::vector<std::size_t>, Color> next_ids;
      auto refine = [&](const Poset& s, const std::vector<Color>& c, Index x) {
        std::vector<std::size_t> key = {c[x]};
        std::vector<std::size_t> ups, downs;
        for (Index y : s.upper_covers(x)) ups.push_back(c[y]);
        for (Index y : s.lower_covers(x)) downs.push_back(c[y]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        key.push_back(ups.size());
        key.insert(key.end(), ups.begin(), ups.end());
        key.insert(key.end(), downs.begin(), downs.end());
        return next_ids.emplace(std::move(key), next_ids.size()).first->second;
      };
      std::vector<Color> np, nq;
      for (Index x = 0; x < p_.size(); ++x) np.push_back(refine(p_, cp_, x));
      for (Index x = 0; x < q_.size(); ++x) nq.push_back(refine(q_, cq_, x));
      cp_ = std::move(np);
      cq_ = std::move(nq);
      if (next_ids.size() == classes) break;
      classes = next_ids.size();
    }
    num_colors_ = classes;
  }

  const std::vector<Color>& p_colors() const { return cp_; }
  const std::vector<Color>& q_colors() const { return cq_; }
  std::size_t num_colors() const { return num_colors_; }

 private:
  const Poset& p_;
  const Poset& q_;
  std::vector<Color> cp_, cq_;
  std::size_t num_colors_ = 0;
};

class Matcher {
 public:
  Matcher(const Poset& p, const Poset& q, const JointColoring& colors)
      : p_(p), q_(q), cp_(colors.p_colors()), cq_(colors.q_colors()) {
    by_color_.resize(colors.num_colors());
    for (Index y = 0; y < q.size(); ++y) by_color_[cq_[y]].push_back(y);
    BuildOrder();
  }

  std::optional<PosetIso> Solve() {
    forward_.assign(p_.size(), kNoElement);
    used_.assign(q_.size(), 0);
    if (!Extend(0)) return std::nullopt;
    PosetIso iso;
    iso.forward = forward_;
    iso.backward.assign(q_.size(), kNoElement);
    for (Index x = 0; x < p_.size(); ++x) iso.backward[forward_[x]] = x;
    return iso;
  }

 private:
  void BuildOrder() {
    const std::size_t n = p_.size();
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> placed_neighbors(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Index best = kNoElement;
      auto better = [&](Index a, Index b) {
        if (b == kNoElement) return true;
        if (placed_neighbors[a] != placed_neighbors[b]) return placed_neighbors[a] > placed_neighbors[b];
        const auto ca = by_color_[cp_[a]].size(), cb = by_color_[cp_[b]].size();
        if (ca != cb) return ca < cb;
        return a < b;
      };
      for (Index x = 0; x < n; ++x) {
        if (!placed[x] && better(x, best)) best = x;
      }
      placed[best] = 1;
      order_.push_back(best);
      for (Index y : p_.upper_covers(best)) ++placed_neighbors[y];
      for (Index y : p_.lower_covers(best)) ++placed_neighbors[y];
    }
  }

  bool Consistent(Index x, Index y, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Index x2 = order_[i];
      const Index y2 = forward_[x2];
      if (p_.less(x, x2) != q_.less(y, y2) || p_.less(x2, x) != q_.less(y2, y)) return false;
    }
    return true;
  }

  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Index x = order_[depth];
    for (Index y : by_color_[cp_[x]]) {
      if (used_[y] || !Consistent(x, y, depth)) continue;
      forward_[x] = y;
      used_[y] = 1;
      if (Extend(depth + 1)) return true;
      used_[y] = 0;
      forward_[x] = kNoElement;
    }
    return false;
  }

  const Poset& p_;
  const Poset& q_;
  const std::vector<Color>& cp_;
  const std::vector<Color>& cq_;
  std::vector<std::vector<Index>> by_color_;
  std::vector<Index> order_;
  std::vector<Index> forward_;
  std::vector<char> used_;
};

}  // namespace

std::optional<PosetIso> FindIsomorphism(const Poset& p, const Poset& q, std::size_t cap) {
  if (p.size() > cap || q.size() > cap) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "isomorphism search is capped at " + std::to_string(cap) + " elements");
  }
  if (p.size() != q.size() || p.cover_pairs().size() != q.cover_pairs().size()) {
    return std::nullopt;
  }
  JointColoring colors(p, q);
  colors.Run();
  std::vector<std::size_t> hp(colors.num_colors()), hq(colors.num_colors());
  for (Color c : colors.p_colors()) ++hp[c];
  for (Color c : colors.q_colors()) ++hq[c];
  if (hp != hq) return std::nullopt;
  return Matcher(p, q, colors).Solve();
}

}  // namespace posetforge
