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

#include "posetforge/sequence.hpp"

#include <numeric>

namespace posetforge {

std::string TupleLabel(const std::vector<int>& entries) {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

bool IsKSubset(const KSubset& x) {
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    if (x.entries[i] < 1 || x.entries[i] > x.n) return false;
    if (i && x.entries[i - 1] >= x.entries[i]) return false;
  }
  return true;
}

bool IsWeakChain(const WeakChain& x) {
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    if (x.entries[i] < 0 || x.entries[i] > x.a) return false;
    if (i && x.entries[i - 1] > x.entries[i]) return false;
  }
  return true;
}

namespace {

void RequireNonNegative(int a, int b, const char* what) {
  if (a < 0 || b < 0) {
    throw Error(ErrorCode::kBadParameters, std::string(what) + ": negative parameter");
  }
}

// Componentwise strict order over equal-length tuples.
template <typename T, typename Get>
Poset ComponentwisePoset(const std::vector<T>& items, Get get) {
  const std::size_t n = items.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index i = 0; i < n; ++i) {
    const auto& xi = get(items[i]);
    labels.push_back(TupleLabel(xi));
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& xj = get(items[j]);
      bool le = true;
      for (std::size_t t = 0; t < xi.size() && le; ++t) le = xi[t] <= xj[t];
      if (le) rel[i].set(j);
    }
  }
  return Poset::FromStrictOrder(std::move(labels), std::move(rel));
}

}  // namespace

std::vector<KSubset> KSubsets(int n, int k) {
  RequireNonNegative(n, k, "KSubsets");
  std::vector<KSubset> out;
  if (k > n) return out;
  // Colex successor: bump the first entry that can move up, reset the ones
  // before it to 1, 2, ...
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(KSubset{n, cur});
    int i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : n + 1)) ++i;
    if (i == k) break;
    ++cur[i];
    for (int t = 0; t < i; ++t) cur[t] = t + 1;
  }
  return out;
}

std::vector<WeakChain> WeakChains(int a, int b) {
  RequireNonNegative(a, b, "WeakChains");
  std::vector<WeakChain> out;
  std::vector<int> cur(b, 0);
  while (true) {
    out.push_back(WeakChain{a, cur});
    // Lexicographic successor among weakly increasing tuples bounded by a.
    int i = b - 1;
    while (i >= 0 && cur[i] == a) --i;
    if (i < 0) break;
    ++cur[i];
    for (int t = i + 1; t < b; ++t) cur[t] = cur[i];
  }
  return out;
}

bool GaleLeq(const KSubset& x, const KSubset& y) {
  if (x.k() != y.k()) return false;
  for (std::size_t i = 0; i < x.k(); ++i) {
    if (x.entries[i] > y.entries[i]) return false;
  }
  return true;
}

int Rho(const KSubset& x) { return std::accumulate(x.entries.begin(), x.entries.end(), 0); }

Poset CPoset(int n, int k) {
  RequireNonNegative(n, k, "CPoset");
  if (k > n) {
    throw Error(ErrorCode::kBadParameters,
                "C(n,k) needs k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return ComponentwisePoset(KSubsets(n, k), [](const KSubset& s) -> const std::vector<int>& {
    return s.entries;
  });
}

Poset SPoset(int a, int b) {
  RequireNonNegative(a, b, "SPoset");
  return ComponentwisePoset(WeakChains(a, b), [](const WeakChain& s) -> const std::vector<int>& {
    return s.entries;
  });
}

Poset Grid(int a, int b) {
  RequireNonNegative(a, b, "Grid");
  return Product(Chain(static_cast<std::size_t>(a)), Chain(static_cast<std::size_t>(b)));
}

KSubset HMap(const WeakChain& x) {
  KSubset out;
  const int b = static_cast<int>(x.b());
  out.n = x.a + b;
  // Display position p holds x_{b-p}; it is shifted by p + 1.
  for (int p = 0; p < b; ++p) out.entries.push_back(x.entries[p] + p + 1);
  return out;
}

WeakChain FMap(int a, int b, const Ideal& ideal) {
  const Poset grid = Grid(a, b);
  if (!IsIdeal(grid, ideal.members)) {
    throw Error(ErrorCode::kNotAnIdeal, "set is not an ideal of the grid");
  }
  WeakChain out;
  out.a = a;
  out.entries.assign(b, 0);
  for (int j = 1; j <= b; ++j) {
    int m = 0;
    for (int i = 1; i <= a; ++i) {
      if (ideal.members[GridIndex(b, i, j)]) m = i;
    }
    out.entries[b - j] = m;
  }
  return out;
}

}  // namespace posetforge
