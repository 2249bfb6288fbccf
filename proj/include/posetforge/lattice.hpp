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

#pragma once

#include <optional>

#include "posetforge/kernels.hpp"
#include "posetforge/poset.hpp"

namespace posetforge {

class MeetJoinTable {
 public:
  explicit MeetJoinTable(MeetJoinRaw raw);

  std::size_t size() const { return raw_.n; }
  std::optional<Index> meet(Index x, Index y) const;
  std::optional<Index> join(Index x, Index y) const;
  // Both tables are total (the poset is a lattice).
  bool complete() const { return complete_; }
  const MeetJoinRaw& raw() const { return raw_; }

 private:
  MeetJoinRaw raw_;
  bool complete_ = false;
};

MeetJoinTable ComputeMeetJoinTable(const Poset& p);

// A nonempty poset whose meet/join tables are total.
bool IsLattice(const Poset& p);

struct DistributivityReport {
  bool is_lattice = false;
  bool is_distributive = false;
  // A failing (x, y, z) for x ^ (y v z) = (x ^ y) v (x ^ z), when is_lattice.
  std::optional<Triple> counterexample;
  // On success: the join-irreducibles, J(Irr), and the map x -> {j <= x}.
  std::vector<Index> join_irreducibles;
  std::optional<IdealLattice> birkhoff_target;
  std::optional<PosetIso> birkhoff;
};

DistributivityReport CheckDistributive(const Poset& p);
inline bool IsDistributive(const Poset& p) { return CheckDistributive(p).is_distributive; }

// Elements covering exactly one element, as indices of P. Throws
// kNotALattice.
std::vector<Index> JoinIrreducibleIndices(const Poset& p);
Poset JoinIrreducibles(const Poset& p);

}  // namespace posetforge
