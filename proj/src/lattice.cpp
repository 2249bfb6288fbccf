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

#include "posetforge/lattice.hpp"

#include <algorithm>
#include <map>

namespace posetforge {

MeetJoinTable::MeetJoinTable(MeetJoinRaw raw) : raw_(std::move(raw)) {
  complete_ = raw_.n > 0 &&
              std::none_of(raw_.meet.begin(), raw_.meet.end(),
                           [](Index v) { return v == kNoElement; }) &&
              std::none_of(raw_.join.begin(), raw_.join.end(),
                           [](Index v) { return v == kNoElement; });
}

std::optional<Index> MeetJoinTable::meet(Index x, Index y) const {
  const Index v = raw_.meet[x * raw_.n + y];
  if (v == kNoElement) return std::nullopt;
  return v;
}

std::optional<Index> MeetJoinTable::join(Index x, Index y) const {
  const Index v = raw_.join[x * raw_.n + y];
  if (v == kNoElement) return std::nullopt;
  return v;
}

MeetJoinTable ComputeMeetJoinTable(const Poset& p) { return MeetJoinTable(kernels::MeetJoin(p)); }

bool IsLattice(const Poset& p) {
  if (p.empty() || !p.minimum() || !p.maximum()) return false;
  return ComputeMeetJoinTable(p).complete();
}

std::vector<Index> JoinIrreducibleIndices(const Poset& p) {
  if (!IsLattice(p)) throw Error(ErrorCode::kNotALattice, "poset is not a lattice");
  std::vector<Index> out;
  for (Index x = 0; x < p.size(); ++x) {
    if (p.lower_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

Poset JoinIrreducibles(const Poset& p) {
  const auto irr = JoinIrreducibleIndices(p);
  return Induced(p, irr);
}

DistributivityReport CheckDistributive(const Poset& p) {
  DistributivityReport report;
  if (p.empty() || !p.minimum() || !p.maximum()) return report;
  MeetJoinTable table = ComputeMeetJoinTable(p);
  if (!table.complete()) return report;
  report.is_lattice = true;
  report.counterexample = kernels::FirstNonDistributiveTriple(table.raw());
  if (report.counterexample) return report;

  report.join_irreducibles = JoinIrreducibleIndices(p);
  const Poset irr = Induced(p, report.join_irreducibles);
  IdealLattice target = IdealsLattice(irr);
  std::map<Bitset, Index> position;
  for (Index i = 0; i < target.ideals.size(); ++i) position.emplace(target.ideals[i].members, i);

  PosetIso iso;
  iso.forward.assign(p.size(), kNoElement);
  iso.backward.assign(target.poset.size(), kNoElement);
  bool bijective = target.poset.size() == p.size();
  for (Index x = 0; x < p.size() && bijective; ++x) {
    Bitset below_x(irr.size());
    for (Index j = 0; j < report.join_irreducibles.size(); ++j) {
      if (p.leq(report.join_irreducibles[j], x)) below_x.set(j);
    }
    auto it = position.find(below_x);
    if (it == position.end() || iso.backward[it->second] != kNoElement) {
      bijective = false;
      break;
    }
    iso.forward[x] = it->second;
    iso.backward[it->second] = x;
  }
  report.is_distributive = bijective && VerifyIsomorphism(p, target.poset, iso.forward);
  if (report.is_distributive) {
    report.birkhoff = std::move(iso);
    report.birkhoff_target = std::move(target);
  }
  return report;
}

}  // namespace posetforge
