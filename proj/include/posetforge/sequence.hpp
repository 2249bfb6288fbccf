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

// Posets of integer sequences: the Gale order on k-subsets of [n] and the
// componentwise order on bounded weakly monotone tuples, plus the maps that
// identify them with ideals of a grid.

#pragma once

#include <string>
#include <vector>

#include "posetforge/poset.hpp"

namespace posetforge {

// Strictly increasing (x_1 < ... < x_k) with entries in [n].
struct KSubset {
  int n = 0;
  std::vector<int> entries;

  std::size_t k() const { return entries.size(); }
  friend bool operator==(const KSubset&, const KSubset&) = default;
};

// Entries stored in display order (x_b, ..., x_1), so 0 <= x_b <= ... <= x_1
// <= a reads as a weakly increasing vector left to right.
struct WeakChain {
  int a = 0;
  std::vector<int> entries;

  std::size_t b() const { return entries.size(); }
  // x_i in the 1-based naming above.
  int x(std::size_t i) const { return entries[entries.size() - i]; }
  friend bool operator==(const WeakChain&, const WeakChain&) = default;
};

// Prints as "(1,3,4)"; "()" when empty.
std::string TupleLabel(const std::vector<int>& entries);

bool IsKSubset(const KSubset& x);
bool IsWeakChain(const WeakChain& x);

// All k-subsets of [n] in colexicographic order; (1..k) first.
std::vector<KSubset> KSubsets(int n, int k);
// All weak chains (x_b..x_1) bounded by a, lexicographic in display order.
std::vector<WeakChain> WeakChains(int a, int b);

bool GaleLeq(const KSubset& x, const KSubset& y);
int Rho(const KSubset& x);

// Element i of CPoset(n, k) is KSubsets(n, k)[i]. Throws kBadParameters when
// k > n or either argument is negative.
Poset CPoset(int n, int k);
Poset SPoset(int a, int b);

// [a] x [b]; element (i, j) sits at index (i-1) * b + (j-1).
Poset Grid(int a, int b);
inline Index GridIndex(int b, int i, int j) {
  return static_cast<Index>((i - 1) * b + (j - 1));
}

KSubset HMap(const WeakChain& x);
// Throws kNotAnIdeal when `ideal` is not an ideal of Grid(a, b).
WeakChain FMap(int a, int b, const Ideal& ideal);

}  // namespace posetforge
