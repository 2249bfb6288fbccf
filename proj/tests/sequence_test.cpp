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

#include "posetforge/sequence.hpp"
#include "test_support.hpp"

namespace posetforge {
namespace {

Index LabelIndex(const Poset& p, const std::string& label) {
  auto i = p.index_of(label);
  EXPECT_TRUE(i.has_value()) << label;
  return i.value_or(0);
}

TEST(CPosetTest, Examples) {
  const Poset c = CPoset(4, 2);
  EXPECT_EQ(c.size(), 6u);
  EXPECT_EQ(c.minimum(), LabelIndex(c, "(1,2)"));
  EXPECT_EQ(c.maximum(), LabelIndex(c, "(3,4)"));
  EXPECT_EQ(CPoset(7, 0).size(), 1u);
  EXPECT_THROW(CPoset(2, 3), Error);
  EXPECT_THROW(CPoset(-1, 0), Error);
}

TEST(CPosetTest, CoversOfOneThree) {
  const Poset c = CPoset(4, 2);
  const Index x = LabelIndex(c, "(1,3)");
  std::set<std::string> up, down;
  for (Index y : c.upper_covers(x)) up.insert(c.label(y));
  for (Index y : c.lower_covers(x)) down.insert(c.label(y));
  EXPECT_EQ(up, (std::set<std::string>{"(1,4)", "(2,3)"}));
  EXPECT_EQ(down, (std::set<std::string>{"(1,2)"}));
}

TEST(RhoTest, Values) {
  EXPECT_EQ(Rho(KSubset{5, {1, 2, 3}}), 6);
  EXPECT_EQ(Rho(KSubset{5, {1, 3, 4}}), 8);
  const Poset c = CPoset(6, 3);
  const auto s = KSubsets(6, 3);
  for (auto [x, y] : c.cover_pairs()) EXPECT_EQ(Rho(s[y]), Rho(s[x]) + 1);
}

// Oracle: all increasing k-tuples drawn from 1..n, compared componentwise.
TEST(CPosetProperty, MatchesTupleEnumeration) {
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subsets = KSubsets(n, k);
      ASSERT_EQ(subsets.size(), testing::BinomialOracle(n, k));
      std::set<std::vector<int>> seen;
      for (const auto& s : subsets) {
        ASSERT_TRUE(std::is_sorted(s.entries.begin(), s.entries.end()));
        ASSERT_TRUE(seen.insert(s.entries).second);
        for (int v : s.entries) ASSERT_TRUE(v >= 1 && v <= n);
      }
      const Poset c = CPoset(n, k);
      for (Index x = 0; x < c.size(); ++x) {
        for (Index y = 0; y < c.size(); ++y) {
          bool leq = true;
          for (int t = 0; t < k; ++t) leq = leq && subsets[x].entries[t] <= subsets[y].entries[t];
          ASSERT_EQ(c.leq(x, y), leq);
        }
      }
    }
  }
}

TEST(SPosetTest, Examples) {
  const Poset s11 = SPoset(1, 1);
  EXPECT_TRUE(FindIsomorphism(s11, Chain(2)).has_value());
  const Poset s22 = SPoset(2, 2);
  std::size_t oracle = 0;
  for (int x1 = 0; x1 <= 2; ++x1)
    for (int x2 = x1; x2 <= 2; ++x2) ++oracle;
  EXPECT_EQ(s22.size(), oracle);
  EXPECT_EQ(s22.size(), 6u);
  EXPECT_TRUE(s22.covered_by(LabelIndex(s22, "(0,1)"), LabelIndex(s22, "(1,1)")));
}

TEST(HMapTest, Examples) {
  EXPECT_EQ(HMap(WeakChain{3, {0, 0, 0}}).entries, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(HMap(WeakChain{2, {0, 1}}).entries, (std::vector<int>{1, 3}));
  const auto chains = WeakChains(3, 2);
  const auto subsets = KSubsets(5, 2);
  const Poset s = SPoset(3, 2), c = CPoset(5, 2);
  ASSERT_EQ(s.size(), 10u);
  std::vector<Index> forward;
  for (const auto& w : chains) {
    const auto h = HMap(w).entries;
    forward.push_back(std::find_if(subsets.begin(), subsets.end(), [&](const KSubset& t) {
                        return t.entries == h;
                      }) - subsets.begin());
  }
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y) EXPECT_EQ(s.leq(x, y), c.leq(forward[x], forward[y]));
}

TEST(FMapTest, Examples) {
  const int a = 2, b = 2;
  Ideal empty{Bitset(4)};
  EXPECT_EQ(FMap(a, b, empty).entries, (std::vector<int>{0, 0}));
  Ideal three{Bitset(4)};
  three.members.set(GridIndex(b, 1, 1));
  three.members.set(GridIndex(b, 2, 1));
  three.members.set(GridIndex(b, 1, 2));
  EXPECT_EQ(FMap(a, b, three).entries, (std::vector<int>{1, 2}));
  Ideal bad{Bitset(4)};
  bad.members.set(GridIndex(b, 2, 2));
  EXPECT_THROW(FMap(a, b, bad), Error);
}

// Property: the composite h o f sends containment of grid ideals to the Gale
// order, checked against column heights computed directly from the bitmask.
TEST(FMapProperty, ColumnHeightsOracle) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const Poset g = Grid(a, b);
      const testing::Rel r = testing::FromPoset(g);
      for (std::uint32_t m = 0; m < (1u << (a * b)); ++m) {
        if (!testing::IsIdealMask(r, m)) continue;
        Ideal ideal{Bitset(a * b)};
        for (int i : testing::Members(m)) ideal.members.set(i);
        const WeakChain w = FMap(a, b, ideal);
        ASSERT_TRUE(IsWeakChain(w));
        for (int j = 1; j <= b; ++j) {
          int height = 0;
          for (int i = 1; i <= a; ++i) height += (m >> GridIndex(b, i, j)) & 1;
          ASSERT_EQ(w.x(j), height);
        }
      }
    }
  }
}

}  // namespace
}  // namespace posetforge
