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

// Orders on the set A_k(P) of size-k antichains of P.
//
// The ideal order: A <=_J B iff every a in A lies below some b in B.
//
// The swap order <=_k: the reflexive-transitive closure of single-element
// replacements A -> (A \ {a}) u {b} with a < b and both sides antichains.
// Its covers are exactly the replacements with a covered by b, so the
// default construction only generates those edges; the all-pairs
// construction is kept as a reference.

#pragma once

#include <utility>
#include <vector>

#include "posetforge/poset.hpp"

namespace posetforge {

enum class AntichainOrder { kSwap, kIdeal };

struct AntichainFamily {
  std::vector<Antichain> antichains;  // antichains[i] is element i of `poset`
  Poset poset;
};

bool LeqJ(const Poset& p, const Antichain& a, const Antichain& b);

// One replacement step a -> b with a < b (not necessarily a cover).
// Requires |A| = |B|, else kSizeMismatch.
bool IsSwapStep(const Poset& p, const Antichain& a, const Antichain& b);
// One replacement step with a covered by b. Requires |A| = |B|.
bool IsCoverK(const Poset& p, const Antichain& a, const Antichain& b);

// Elements of A_k(P) labelled "{x,y,...}". Empty when k > width(P).
AntichainFamily AntichainFamilyOf(const Poset& p, std::size_t k,
                                  AntichainOrder order = AntichainOrder::kSwap);
Poset AntichainPosetK(const Poset& p, std::size_t k);
Poset AntichainPosetJ(const Poset& p, std::size_t k);

// <=_k built from every replacement step (a < b), closed transitively.
AntichainFamily AntichainFamilyReference(const Poset& p, std::size_t k);

struct RefinementReport {
  // A <=_k B implies A <=_J B on every pair.
  bool refinement_holds = true;
  std::size_t k_comparable_pairs = 0;
  std::size_t j_comparable_pairs = 0;
  // A <=_J B but not A <=_k B (strict, A != B).
  std::vector<std::pair<Antichain, Antichain>> coarsening_witnesses;
  // A <=_k B but not A <=_J B; stays empty unless the order is broken.
  std::vector<std::pair<Antichain, Antichain>> violations;
};

RefinementReport CompareOrders(const Poset& p, std::size_t k);

// Perfect matching a_i <= b_i between equal-size antichains.
bool HasDominatingMatching(const Poset& p, const Antichain& a, const Antichain& b);

}  // namespace posetforge
