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

#include "posetforge/antichain_order.hpp"

#include <algorithm>

#include "posetforge/kernels.hpp"

namespace posetforge {

bool LeqJ(const Poset& p, const Antichain& a, const Antichain& b) {
  for (Index x : a.members) {
    bool dominated = false;
    for (Index y : b.members) {
      if (p.leq(x, y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

namespace {

// The unique pair (a, b) with A \ B = {a}, B \ A = {b}, if it exists.
std::optional<IndexPair> SingleDifference(const Antichain& a, const Antichain& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kSizeMismatch, "antichains of sizes " + std::to_string(a.size()) +
                                              " and " + std::to_string(b.size()));
  }
  std::vector<Index> only_a, only_b;
  std::set_difference(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                      std::back_inserter(only_a));
  std::set_difference(b.members.begin(), b.members.end(), a.members.begin(), a.members.end(),
                      std::back_inserter(only_b));
  if (only_a.size() != 1 || only_b.size() != 1) return std::nullopt;
  return IndexPair{only_a[0], only_b[0]};
}

std::vector<std::string> FamilyLabels(const Poset& p, const std::vector<Antichain>& family) {
  std::vector<std::string> labels;
  labels.reserve(family.size());
  for (const Antichain& a : family) labels.push_back(AntichainLabel(p, a));
  return labels;
}

AntichainIndex IndexFamily(const std::vector<Antichain>& family) {
  AntichainIndex lookup;
  lookup.reserve(family.size());
  for (Index i = 0; i < family.size(); ++i) lookup.emplace(family[i].members, i);
  return lookup;
}

}  // namespace

bool IsSwapStep(const Poset& p, const Antichain& a, const Antichain& b) {
  auto diff = SingleDifference(a, b);
  return diff && p.less(diff->first, diff->second);
}

bool IsCoverK(const Poset& p, const Antichain& a, const Antichain& b) {
  auto diff = SingleDifference(a, b);
  return diff && p.covered_by(diff->first, diff->second);
}

AntichainFamily AntichainFamilyOf(const Poset& p, std::size_t k, AntichainOrder order) {
  AntichainFamily out;
  out.antichains = AntichainsOfSize(p, k);
  const std::size_t n = out.antichains.size();
  std::vector<Bitset> rel(n, Bitset(n));
  if (order == AntichainOrder::kSwap) {
    const AntichainIndex lookup = IndexFamily(out.antichains);
    const auto edges = kernels::CoverSwapEdges(p, out.antichains, lookup);
    for (Index i = 0; i < n; ++i) {
      for (Index j : edges[i]) rel[i].set(j);
    }
    out.poset = Poset::FromGenerators(FamilyLabels(p, out.antichains), std::move(rel));
  } else {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (i != j && LeqJ(p, out.antichains[i], out.antichains[j])) rel[i].set(j);
      }
    }
    out.poset = Poset::FromStrictOrder(FamilyLabels(p, out.antichains), std::move(rel));
  }
  return out;
}

Poset AntichainPosetK(const Poset& p, std::size_t k) {
  return AntichainFamilyOf(p, k, AntichainOrder::kSwap).poset;
}

Poset AntichainPosetJ(const Poset& p, std::size_t k) {
  return AntichainFamilyOf(p, k, AntichainOrder::kIdeal).poset;
}

AntichainFamily AntichainFamilyReference(const Poset& p, std::size_t k) {
  AntichainFamily out;
  out.antichains = AntichainsOfSize(p, k);
  const std::size_t n = out.antichains.size();
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i != j && IsSwapStep(p, out.antichains[i], out.antichains[j])) rel[i].set(j);
    }
  }
  kernels::serial::TransitiveClosure(rel);
  out.poset = Poset::FromStrictOrder(FamilyLabels(p, out.antichains), std::move(rel));
  return out;
}

RefinementReport CompareOrders(const Poset& p, std::size_t k) {
  RefinementReport report;
  const AntichainFamily fam = AntichainFamilyOf(p, k, AntichainOrder::kSwap);
  const auto& as = fam.antichains;
  for (Index i = 0; i < as.size(); ++i) {
    for (Index j = 0; j < as.size(); ++j) {
      if (i == j) continue;
      const bool by_k = fam.poset.less(i, j);
      const bool by_j = LeqJ(p, as[i], as[j]);
      report.k_comparable_pairs += by_k;
      report.j_comparable_pairs += by_j;
      if (by_k && !by_j) {
        report.refinement_holds = false;
        report.violations.emplace_back(as[i], as[j]);
      }
      if (by_j && !by_k) report.coarsening_witnesses.emplace_back(as[i], as[j]);
    }
  }
  return report;
}

namespace {

bool AugmentMatching(const Poset& p, const Antichain& a, const Antichain& b, std::size_t i,
                     std::vector<char>& seen, std::vector<std::size_t>& match) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (seen[j] || !p.leq(a.members[i], b.members[j])) continue;
    seen[j] = 1;
    if (match[j] == b.size() || AugmentMatching(p, a, b, match[j], seen, match)) {
      match[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

bool HasDominatingMatching(const Poset& p, const Antichain& a, const Antichain& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> match(b.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<char> seen(b.size(), 0);
    if (!AugmentMatching(p, a, b, i, seen, match)) return false;
  }
  return true;
}

}  // namespace posetforge
