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

#include "posetforge/corpus.hpp"
#include "posetforge/io.hpp"
#include "posetforge/minuscule.hpp"
#include "posetforge/sequence.hpp"
#include "test_support.hpp"

namespace posetforge {
namespace {

using testing::AntichainMasks;
using testing::Rel;

Poset FivePoint() {
  return BuildPoset({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}});
}

std::set<std::pair<std::string, std::string>> LabelCovers(const Poset& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [x, y] : p.cover_pairs()) out.emplace(p.label(x), p.label(y));
  return out;
}

TEST(BuildPosetTest, FivePointHasFourCovers) {
  const Poset p = FivePoint();
  EXPECT_EQ(p.size(), 5u);
  EXPECT_EQ(LabelCovers(p), (std::set<std::pair<std::string, std::string>>{
                                {"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}}));
  EXPECT_TRUE(p.less(*p.index_of("a"), *p.index_of("e")));
  EXPECT_FALSE(p.comparable(*p.index_of("a"), *p.index_of("b")));
}

TEST(BuildPosetTest, Singleton) {
  const Poset p = BuildPoset({"x"}, {});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.cover_pairs().empty());
  EXPECT_EQ(p.minimum(), 0u);
}

TEST(BuildPosetTest, Errors) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kUnknownCheck;
  };
  EXPECT_EQ(code_of([] { BuildPoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }), ErrorCode::kCycleDetected);
  EXPECT_EQ(code_of([] { BuildPoset({"a"}, {{"a", "a"}}); }), ErrorCode::kCycleDetected);
  EXPECT_EQ(code_of([] { BuildPoset({"a", "a"}, {}); }), ErrorCode::kDuplicateLabel);
  EXPECT_EQ(code_of([] { BuildPoset({"a"}, {{"a", "z"}}); }), ErrorCode::kUnknownLabel);
}

TEST(CoversTest, ChainAndGrid) {
  EXPECT_EQ(LabelCovers(Chain(3)),
            (std::set<std::pair<std::string, std::string>>{{"1", "2"}, {"2", "3"}}));
  const Poset g = Product(Chain(2), Chain(2));
  const Rel r = testing::FromPoset(g);
  std::size_t oracle = 0;
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) oracle += testing::IsCoverOracle(r, x, y);
  EXPECT_EQ(oracle, 4u);
  EXPECT_EQ(g.cover_pairs().size(), 4u);
}

TEST(ProductTest, WidthAndIdentity) {
  const Poset g22 = Product(Chain(2), Chain(2));
  EXPECT_EQ(g22.size(), 4u);
  EXPECT_EQ(Width(g22), 2u);
  const Poset g33 = Product(Chain(3), Chain(3));
  EXPECT_EQ(g33.size(), 9u);
  EXPECT_EQ(Width(g33), 3u);
  const Poset p = FivePoint();
  EXPECT_TRUE(FindIsomorphism(Product(p, Chain(1)), p).has_value());
}

TEST(IdealsTest, SmallCases) {
  EXPECT_EQ(IdealsPoset(AntichainPoset(3)).size(), 8u);
  const Poset jc = IdealsPoset(Chain(4));
  EXPECT_EQ(jc.size(), 5u);
  EXPECT_TRUE(FindIsomorphism(jc, Chain(5)).has_value());
  EXPECT_EQ(IdealsPoset(Product(Chain(2), Chain(2))).size(), 6u);
  EXPECT_EQ(IdealsPoset(Poset{}).size(), 1u);
}

TEST(AntichainsTest, FivePointExample) {
  const Poset p = FivePoint();
  const auto two = AntichainsOfSize(p, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(AntichainLabel(p, two[0]), "{a,b}");
  EXPECT_EQ(AntichainLabel(p, two[1]), "{d,e}");
  EXPECT_EQ(AntichainsOfSize(p, 0).size(), 1u);
  EXPECT_EQ(AntichainsOfSize(IdealsPoset(AntichainPoset(3)), 2).size(), 9u);
}

TEST(WidthTest, Examples) {
  EXPECT_EQ(Width(Chain(5)), 1u);
  EXPECT_EQ(Width(MinusculePoset(minuscule::SpinD{4})), 3u);
  EXPECT_EQ(Width(MinusculePoset(minuscule::E7{})), 3u);
}

TEST(IdealOfTest, GridAntichain) {
  const Poset g = Grid(2, 2);
  const Antichain a{{GridIndex(2, 1, 2), GridIndex(2, 2, 1)}};
  const Ideal i = IdealOf(g, a);
  EXPECT_EQ(i.size(), 3u);
  EXPECT_EQ(MaxElements(g, i), a);
  EXPECT_EQ(IdealOf(g, Antichain{}).size(), 0u);
}

// Property: antichains, ideals and width agree with subset enumeration on
// random posets, and IdealOf / MaxElements are mutually inverse.
TEST(PosetProperty, AntichainsIdealsWidthMatchOracle) {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 8;
    const Rel r = testing::RandomOrder(rng, n, 0.15 + 0.1 * (trial % 5));
    const Poset p = testing::ToPoset(r);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        ASSERT_EQ(p.less(x, y), r.lt[x][y]);
        ASSERT_EQ(p.covered_by(x, y), testing::IsCoverOracle(r, x, y));
      }
    std::size_t width = 0, ideals = 0;
    for (int k = 0; k <= n; ++k) {
      const auto masks = AntichainMasks(r, k);
      const auto got = AntichainsOfSize(p, k);
      ASSERT_EQ(got.size(), masks.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        ASSERT_EQ(got[i].members, testing::ToIndices(masks[i]))
            << "antichains are listed in lexicographic order of members";
      }
      if (!masks.empty()) width = k;
      for (const Antichain& a : got) ASSERT_EQ(MaxElements(p, IdealOf(p, a)), a);
    }
    for (std::uint32_t m = 0; m < (1u << n); ++m) ideals += testing::IsIdealMask(r, m);
    EXPECT_EQ(Width(p), width);
    EXPECT_EQ(IdealsPoset(p).size(), ideals);
  }
}

TEST(IsomorphismTest, Basics) {
  const Poset p = FivePoint();
  auto id = FindIsomorphism(p, p);
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(VerifyIsomorphism(p, p, id->forward));
  EXPECT_FALSE(FindIsomorphism(Chain(3), AntichainPoset(3)).has_value());
  const Poset e7 = MinusculePoset(minuscule::E7{});
  EXPECT_THROW(FindIsomorphism(e7, e7, 10), Error);
}

// Property: the search agrees with brute-force permutation checks on pairs
// of random posets of equal size.
TEST(IsomorphismProperty, AgreesWithPermutationOracle) {
  std::mt19937 rng(7);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const Rel a = testing::RandomOrder(rng, n, 0.3);
    const Rel b = trial % 2 ? testing::RandomOrder(rng, n, 0.3) : testing::FromPoset(testing::ToPoset(a));
    const Poset pa = testing::ToPoset(a), pb = testing::ToPoset(b);
    auto iso = FindIsomorphism(pa, pb);
    ASSERT_EQ(iso.has_value(), testing::IsomorphicOracle(a, b));
    if (iso) {
      ++found;
      ASSERT_TRUE(VerifyIsomorphism(pa, pb, iso->forward));
    }
  }
  EXPECT_GT(found, 150);
}

// Property: rebuilding from the cover pairs gives back the same order.
TEST(PosetProperty, CoversGenerateTheOrder) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = testing::ToPoset(testing::RandomOrder(rng, 1 + trial % 10, 0.3));
    std::vector<std::pair<std::string, std::string>> gens;
    for (auto [x, y] : p.cover_pairs()) gens.emplace_back(p.label(x), p.label(y));
    const Poset q = BuildPoset(p.labels(), gens);
    for (Index x = 0; x < p.size(); ++x)
      for (Index y = 0; y < p.size(); ++y) ASSERT_EQ(p.less(x, y), q.less(x, y));
  }
}

// Property: isomorphism search is symmetric, and products are associative
// and commutative up to isomorphism.
TEST(ProductProperty, AssociativeCommutativeUpToIsomorphism) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Poset a = testing::ToPoset(testing::RandomOrder(rng, 1 + trial % 3, 0.4));
    const Poset b = testing::ToPoset(testing::RandomOrder(rng, 1 + (trial / 3) % 3, 0.4));
    const Poset c = testing::ToPoset(testing::RandomOrder(rng, 1 + trial % 2, 0.4));
    const Poset ab = Product(a, b), ba = Product(b, a);
    ASSERT_TRUE(FindIsomorphism(ab, ba).has_value());
    ASSERT_TRUE(FindIsomorphism(Product(ab, c), Product(a, Product(b, c))).has_value());
    const Poset x = testing::ToPoset(testing::RandomOrder(rng, 5, 0.3));
    const Poset y = testing::ToPoset(testing::RandomOrder(rng, 5, 0.3));
    ASSERT_EQ(FindIsomorphism(x, y).has_value(), FindIsomorphism(y, x).has_value());
  }
}

TEST(CorpusTest, CountsUpToIsomorphism) {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(PosetsUpToIsomorphism(n).size(), expected[n]) << "n=" << n;
  }
  EXPECT_THROW(PosetsUpToIsomorphism(7), Error);
}

TEST(CorpusTest, CanonicalCodesAgreeWithSearch) {
  const auto level = PosetsUpToIsomorphism(4);
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (std::size_t j = 0; j < level.size(); ++j) {
      EXPECT_EQ(FindIsomorphism(level[i], level[j]).has_value(), i == j);
      EXPECT_EQ(CanonicalCode(level[i]) == CanonicalCode(level[j]), i == j);
    }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset a = testing::ToPoset(testing::RandomOrder(rng, 6, 0.3));
    const Poset b = testing::ToPoset(testing::RandomOrder(rng, 6, 0.3));
    EXPECT_EQ(CanonicalCode(a) == CanonicalCode(b), FindIsomorphism(a, b).has_value());
  }
}

TEST(JsonTest, RoundTripIsIdentity) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Poset p = testing::ToPoset(testing::RandomOrder(rng, 1 + trial % 9, 0.3));
    const std::string once = PosetToJson(p).dump(2);
    const std::string twice = PosetToJson(ParsePosetJson(once)).dump(2);
    EXPECT_EQ(once, twice);
  }
}

TEST(JsonTest, ErrorsAreLineAnchored) {
  try {
    ParsePosetJson("{\n  \"elements\": [\"a\", \"b\"],\n  \"relations\": [[\"a\", \"zz\"]]\n}", "f.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("f.json:3:"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("unknown label"), std::string::npos);
  }
  try {
    ParsePosetJson("{\"elements\": [\"a\",\n  ", "g.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(ParsePosetJson("{\"elements\": [\"a\", \"a\"]}"), InputError);
  EXPECT_THROW(ParsePosetJson("{\"elements\": [\"a\", \"b\"], \"relations\": [[\"a\",\"b\"],[\"b\",\"a\"]]}"),
               InputError);
}

TEST(DotTest, BottomToTopWithRanks) {
  const std::string dot = ToDot(Chain(2));
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
  EXPECT_NE(dot.find("rank=same"), std::string::npos);
}

}  // namespace
}  // namespace posetforge
