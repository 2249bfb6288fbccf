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
#include "posetforge/ferrers.hpp"
#include "posetforge/sequence.hpp"
#include "test_support.hpp"

namespace posetforge {
namespace {

// Largest k with every cell of [k]x[k] present.
int DurfeeOracle(const FerrersDiagram& d) {
  int best = 0;
  for (int k = 1; k <= std::min(d.a, d.b); ++k) {
    bool square = true;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) square = square && d.contains(i, j);
    if (square) best = k;
  }
  return best;
}

Index SubsetIndex(const std::vector<KSubset>& all, std::vector<int> entries) {
  for (Index i = 0; i < all.size(); ++i)
    if (all[i].entries == entries) return i;
  ADD_FAILURE() << "missing subset";
  return 0;
}

TEST(DurfeeLengthTest, Examples) {
  EXPECT_EQ(DurfeeLength(DiagramInBox(3, 3, {})), 0);
  const FerrersDiagram stair = DiagramFromPartition({3, 2, 1});
  EXPECT_EQ(DurfeeLength(stair), DurfeeOracle(stair));
  EXPECT_EQ(DurfeeLength(stair), 2);
  EXPECT_EQ(DurfeeLength(DiagramInBox(3, 4, {4, 4, 4})), 3);
  EXPECT_EQ(PartitionLabel(stair), "(3,2,1)");
  EXPECT_EQ(ParsePartition("(3,2,1)"), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(ParsePartition("3,2,1"), (std::vector<int>{3, 2, 1}));
  EXPECT_THROW(ParsePartition("1,2"), Error);
  EXPECT_THROW(ParsePartition("3,x"), Error);
}

TEST(DkPosetTest, Examples) {
  EXPECT_EQ(DkPoset(3, 4, 0).size(), 1u);
  // Six diagrams fit in the 2x2 box; the empty one and the full square are
  // the only ones without Durfee length 1.
  std::size_t diagrams = 0, oracle = 0;
  for (int h1 = 0; h1 <= 2; ++h1)
    for (int h2 = 0; h2 <= h1; ++h2) {
      FerrersDiagram d{2, 2, {h1, h2}};
      ++diagrams;
      oracle += DurfeeOracle(d) == 1;
    }
  EXPECT_EQ(diagrams, 6u);
  EXPECT_EQ(oracle, 4u);
  EXPECT_EQ(FerrersDiagrams(2, 2).size(), diagrams);
  EXPECT_EQ(DkPoset(2, 2, 1).size(), oracle);
  EXPECT_THROW(DkPoset(2, 2, 3), Error);
}

TEST(DurfeeDecomposeTest, Examples) {
  const DurfeeParts sq = DurfeeDecompose(DiagramInBox(2, 2, {2, 2}));
  EXPECT_EQ(sq.k, 2);
  EXPECT_EQ(PartitionLabel(sq.above), "()");
  EXPECT_EQ(PartitionLabel(sq.right), "()");
  const FerrersDiagram stair = DiagramInBox(3, 3, {3, 2, 1});
  const DurfeeParts p = DurfeeDecompose(stair);
  EXPECT_EQ(p.k, 2);
  // (1,3) shifts to (1,1) above the square; (3,1) shifts to (1,1) on its right.
  EXPECT_EQ(p.above.heights, (std::vector<int>{1, 0}));
  EXPECT_EQ(p.right.heights, (std::vector<int>{1}));
  EXPECT_EQ(DurfeeCompose(3, 3, p), stair);
}

// Oracle: Ferrers diagrams are the ideals of the grid, found by bitmask scan.
TEST(FerrersProperty, DiagramsAreGridIdealsAndRoundTrip) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const testing::Rel r = testing::FromPoset(Grid(a, b));
      std::size_t ideals = 0;
      for (std::uint32_t m = 0; m < (1u << (a * b)); ++m) ideals += testing::IsIdealMask(r, m);
      const auto diagrams = FerrersDiagrams(a, b);
      ASSERT_EQ(diagrams.size(), ideals);
      for (const auto& d : diagrams) {
        ASSERT_TRUE(IsFerrers(d));
        ASSERT_EQ(DurfeeLength(d), DurfeeOracle(d));
        ASSERT_EQ(DurfeeCompose(a, b, DurfeeDecompose(d)), d);
        ASSERT_EQ(IdealToDiagram(a, b, DiagramToIdeal(d)), d);
      }
    }
  }
}

TEST(PhiGridTest, Examples) {
  const Antichain a{{GridIndex(2, 1, 2), GridIndex(2, 2, 1)}};
  const auto [xs, ys] = PhiGrid(2, 2, a, 2);
  EXPECT_EQ(xs.entries, (std::vector<int>{1, 2}));
  EXPECT_EQ(ys.entries, (std::vector<int>{1, 2}));
  const auto [x0, y0] = PhiGrid(3, 3, Antichain{}, 0);
  EXPECT_TRUE(x0.entries.empty() && y0.entries.empty());
  EXPECT_THROW(PhiGrid(2, 2, Antichain{{GridIndex(2, 1, 1), GridIndex(2, 2, 2)}}, 2), Error);
  EXPECT_THROW(PhiGrid(2, 2, a, 1), Error);
}

// Covers of A_2([3]x[3]) correspond to covers of C(3,2) x C(3,2) under phi.
TEST(PhiGridTest, CoverPreservationThreeByThree) {
  const Poset g = Grid(3, 3);
  const AntichainFamily fam = AntichainFamilyOf(g, 2);
  const auto s = KSubsets(3, 2);
  const Poset target = Product(CPoset(3, 2), CPoset(3, 2));
  std::vector<Index> image;
  for (const Antichain& a : fam.antichains) {
    const auto [xs, ys] = PhiGrid(3, 3, a, 2);
    image.push_back(SubsetIndex(s, xs.entries) * s.size() + SubsetIndex(s, ys.entries));
  }
  for (Index i = 0; i < fam.antichains.size(); ++i)
    for (Index j = 0; j < fam.antichains.size(); ++j)
      EXPECT_EQ(IsCoverK(g, fam.antichains[i], fam.antichains[j]), target.covered_by(image[i], image[j]));
}

TEST(PhiSpinTest, Examples) {
  const auto s = KSubsets(4, 2);
  EXPECT_TRUE(PhiSpin(2, Antichain{}).entries.empty());
  Antichain a{{SubsetIndex(s, {1, 4}), SubsetIndex(s, {2, 3})}};
  std::sort(a.members.begin(), a.members.end());
  EXPECT_EQ(PhiSpin(2, a).entries, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(PhiSpinInverse(2, PhiSpin(2, a)), a);
  Antichain comparable{{SubsetIndex(s, {1, 3}), SubsetIndex(s, {2, 4})}};
  std::sort(comparable.members.begin(), comparable.members.end());
  EXPECT_THROW(PhiSpin(2, comparable), Error);
}

TEST(PhiSpinProperty, CoversBothDirections) {
  for (int n = 1; n <= 5; ++n) {
    const Poset c2 = CPoset(n + 2, 2);
    for (int k = 0; 2 * k <= n + 2; ++k) {
      const AntichainFamily fam = AntichainFamilyOf(c2, k);
      const auto all = KSubsets(n + 2, 2 * k);
      const Poset target = CPoset(n + 2, 2 * k);
      ASSERT_EQ(fam.antichains.size(), all.size());
      std::vector<Index> image;
      for (const Antichain& a : fam.antichains) image.push_back(SubsetIndex(all, PhiSpin(n, a).entries));
      for (Index i = 0; i < image.size(); ++i)
        for (Index j = 0; j < image.size(); ++j)
          ASSERT_EQ(fam.poset.covered_by(i, j), target.covered_by(image[i], image[j]));
    }
  }
}

}  // namespace
}  // namespace posetforge
