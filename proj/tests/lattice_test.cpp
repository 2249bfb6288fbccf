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

#include <gtest/gtest.h>

#include "posetforge/antichain_order.hpp"
#include "posetforge/corpus.hpp"
#include "posetforge/lattice.hpp"
#include "posetforge/sequence.hpp"
#include "test_support.hpp"

namespace posetforge {
namespace {

using testing::Rel;

// Greatest lower bound by scanning all lower bounds; -1 when absent.
int OracleMeet(const Rel& r, int x, int y) {
  std::vector<int> lower;
  for (int z = 0; z < r.n; ++z)
    if (r.leq(z, x) && r.leq(z, y)) lower.push_back(z);
  for (int z : lower) {
    bool greatest = true;
    for (int w : lower) greatest = greatest && r.leq(w, z);
    if (greatest) return z;
  }
  return -1;
}

int OracleJoin(const Rel& r, int x, int y) {
  Rel dual(r.n);
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) dual.lt[i][j] = r.lt[j][i];
  return OracleMeet(dual, x, y);
}

bool OracleIsLattice(const Rel& r) {
  if (r.n == 0) return false;
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (OracleMeet(r, x, y) < 0 || OracleJoin(r, x, y) < 0) return false;
  return true;
}

bool OracleIsDistributive(const Rel& r) {
  if (!OracleIsLattice(r)) return false;
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      for (int z = 0; z < r.n; ++z) {
        const int lhs = OracleMeet(r, x, OracleJoin(r, y, z));
        const int rhs = OracleJoin(r, OracleMeet(r, x, y), OracleMeet(r, x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

Poset Diamond() {  // M3
  return BuildPoset({"0", "a", "b", "c", "1"},
                    {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

Poset Pentagon() {  // N5
  return BuildPoset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

// Random poset with a bottom and a top adjoined.
Poset Bounded(std::mt19937& rng, int inner, double density) {
  Rel core = testing::RandomOrder(rng, inner, density);
  Rel r(inner + 2);
  for (int i = 0; i < inner; ++i) {
    r.lt[inner][i] = r.lt[i][inner + 1] = true;
    for (int j = 0; j < inner; ++j) r.lt[i][j] = core.lt[i][j];
  }
  r.lt[inner][inner + 1] = true;
  return testing::ToPoset(r);
}

TEST(MeetJoinTest, ChainAndAntichain) {
  const Poset c = Chain(3);
  const auto t = ComputeMeetJoinTable(c);
  EXPECT_TRUE(t.complete());
  EXPECT_EQ(t.meet(0, 2), 0u);
  EXPECT_EQ(t.join(0, 2), 2u);
  const auto a = ComputeMeetJoinTable(AntichainPoset(2));
  EXPECT_FALSE(a.complete());
  EXPECT_FALSE(a.join(0, 1).has_value());
  EXPECT_TRUE(ComputeMeetJoinTable(IdealsPoset(Product(Chain(2), Chain(2)))).complete());
}

TEST(DistributiveTest, Examples) {
  EXPECT_FALSE(IsDistributive(Diamond()));
  EXPECT_FALSE(IsDistributive(Pentagon()));
  EXPECT_TRUE(IsLattice(Diamond()));
  const auto rep = CheckDistributive(Pentagon());
  ASSERT_TRUE(rep.counterexample.has_value());
  EXPECT_FALSE(rep.birkhoff.has_value());
  EXPECT_TRUE(IsDistributive(CPoset(5, 2)));
  EXPECT_FALSE(IsDistributive(Poset{}));
  const Poset five = BuildPoset({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}});
  EXPECT_FALSE(IsDistributive(AntichainPosetK(five, 2)));
}

TEST(DistributiveTest, IdealLatticesOfCorpus) {
  for (const Poset& p : PosetCorpus(6)) {
    const Poset j = IdealsPoset(p);
    const auto rep = CheckDistributive(j);
    ASSERT_TRUE(rep.is_distributive);
    // The witness maps J(P) onto J(Irr J(P)), which must be isomorphic to J(P).
    ASSERT_TRUE(VerifyIsomorphism(j, rep.birkhoff_target->poset, rep.birkhoff->forward));
    // Irr(J(P)) is isomorphic to P.
    ASSERT_TRUE(FindIsomorphism(JoinIrreducibles(j), p).has_value());
  }
}

TEST(JoinIrreduciblesTest, Examples) {
  EXPECT_TRUE(FindIsomorphism(JoinIrreducibles(Chain(5)), Chain(4)).has_value());
  const Poset j22 = IdealsPoset(Product(Chain(2), Chain(2)));
  EXPECT_TRUE(FindIsomorphism(JoinIrreducibles(j22), Product(Chain(2), Chain(2))).has_value());
  EXPECT_TRUE(FindIsomorphism(JoinIrreducibles(IdealsPoset(AntichainPoset(3))), AntichainPoset(3)).has_value());
  EXPECT_THROW(JoinIrreducibles(AntichainPoset(2)), Error);
}

// Property: lattice and distributivity verdicts agree with the scan oracle
// on random bounded posets, and every counterexample triple really fails.
TEST(LatticeProperty, AgreesWithOracle) {
  std::mt19937 rng(99);
  int lattices = 0, distributive = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Poset p = Bounded(rng, trial % 7, 0.2 + 0.05 * (trial % 6));
    const Rel r = testing::FromPoset(p);
    const auto t = ComputeMeetJoinTable(p);
    for (int x = 0; x < r.n; ++x)
      for (int y = 0; y < r.n; ++y) {
        const int m = OracleMeet(r, x, y), j = OracleJoin(r, x, y);
        ASSERT_EQ(t.meet(x, y).has_value(), m >= 0);
        ASSERT_EQ(t.join(x, y).has_value(), j >= 0);
        if (m >= 0) ASSERT_EQ(*t.meet(x, y), static_cast<Index>(m));
        if (j >= 0) ASSERT_EQ(*t.join(x, y), static_cast<Index>(j));
      }
    ASSERT_EQ(IsLattice(p), OracleIsLattice(r));
    const auto rep = CheckDistributive(p);
    ASSERT_EQ(rep.is_distributive, OracleIsDistributive(r));
    lattices += rep.is_lattice;
    distributive += rep.is_distributive;
    if (rep.is_lattice && !rep.is_distributive) {
      const auto [x, y, z] = *rep.counterexample;
      const int ix = static_cast<int>(x), iy = static_cast<int>(y), iz = static_cast<int>(z);
      ASSERT_NE(OracleMeet(r, ix, OracleJoin(r, iy, iz)),
                OracleJoin(r, OracleMeet(r, ix, iy), OracleMeet(r, ix, iz)));
    }
    if (rep.is_distributive) {
      ASSERT_TRUE(VerifyIsomorphism(p, rep.birkhoff_target->poset, rep.birkhoff->forward));
    }
  }
  EXPECT_GT(lattices, distributive);
  EXPECT_GT(distributive, 20);
}

}  // namespace
}  // namespace posetforge
