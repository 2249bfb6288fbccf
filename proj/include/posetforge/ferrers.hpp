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

// Ferrers diagrams inside an a x b box (French notation: cell (i, j) is
// column i, row j), Durfee squares, and the explicit maps that identify
// antichain posets of grids and of C(n+2, 2) with sequence posets.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetforge/poset.hpp"
#include "posetforge/sequence.hpp"

namespace posetforge {

struct FerrersDiagram {
  int a = 0;  // columns
  int b = 0;  // maximum column height
  std::vector<int> heights;  // size a, weakly decreasing, entries in [0, b]

  bool contains(int i, int j) const { return i >= 1 && i <= a && j >= 1 && j <= heights[i - 1]; }
  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;
};

bool IsFerrers(const FerrersDiagram& d);
// Nonzero heights as "(3,2,1)"; the empty diagram prints as "()".
std::string PartitionLabel(const FerrersDiagram& d);
// "3,2,1" -> {3,2,1}; throws kBadParameters on malformed or increasing input.
std::vector<int> ParsePartition(const std::string& text);
// Smallest box holding the partition.
FerrersDiagram DiagramFromPartition(const std::vector<int>& parts);
FerrersDiagram DiagramInBox(int a, int b, const std::vector<int>& parts);

int DurfeeLength(const FerrersDiagram& d);

std::vector<FerrersDiagram> FerrersDiagrams(int a, int b);
// Diagrams with Durfee length exactly k, by containment. Element i is
// DiagramsWithDurfee(a, b, k)[i].
std::vector<FerrersDiagram> DiagramsWithDurfee(int a, int b, int k);
Poset DkPoset(int a, int b, int k);

struct DurfeeParts {
  int k = 0;
  FerrersDiagram above;  // box k x (b - k): cells (i, j - k) with j > k
  FerrersDiagram right;  // box (a - k) x k: cells (i - k, j) with i > k
};

DurfeeParts DurfeeDecompose(const FerrersDiagram& d);
FerrersDiagram DurfeeCompose(int a, int b, const DurfeeParts& parts);

Ideal DiagramToIdeal(const FerrersDiagram& d);
FerrersDiagram IdealToDiagram(int a, int b, const Ideal& ideal);

// Grid antichain written as x_1 < ... < x_k, y_1 > ... > y_k, mapped to
// ((x_1..x_k), (y_k..y_1)) in C(a,k) x C(b,k). Throws kNotAnAntichain or
// kSizeMismatch (|A| != k).
std::pair<KSubset, KSubset> PhiGrid(int a, int b, const Antichain& antichain, std::size_t k);
Antichain PhiGridInverse(int a, int b, const KSubset& xs, const KSubset& ys);

// Antichain of CPoset(n+2, 2) (indices into KSubsets(n+2, 2)) mapped to
// (x_1..x_k, y_k..y_1) in C(n+2, 2k). Throws kNotAnAntichain.
KSubset PhiSpin(int n, const Antichain& antichain);
Antichain PhiSpinInverse(int n, const KSubset& s);

}  // namespace posetforge
