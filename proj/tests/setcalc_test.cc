// Copyright 2026 The GCSB Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcsb/setcalc.h"

#include <random>
#include <vector>

#include "gcsb/errors.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace gcsb {
namespace {

using testing::FromMask;
using testing::LevelOracle;
using testing::RandomMasks;

// S1 = {1,2}, S2 = {2,3}, S3 = {1,3} over elements 0..3.
SubsetFamily Triangle() {
  GroundRef g = GroundSet::Create(4);
  return SubsetFamily(g, {ElementSet::Of(g, {1, 2}), ElementSet::Of(g, {2, 3}),
                          ElementSet::Of(g, {1, 3})});
}

TEST(IntersectLevelTest, PairwiseLevelOfTriangleIsEverything) {
  const SubsetFamily f = Triangle();
  EXPECT_EQ(IntersectLevel(f, IndexSet::Of({1, 2, 3}), 2).members(),
            (std::vector<int>{1, 2, 3}));
}

TEST(IntersectLevelTest, TopLevelOfTriangleIsEmpty) {
  EXPECT_TRUE(IntersectLevel(Triangle(), IndexSet::Of({1, 2, 3}), 3).empty());
}

TEST(IntersectLevelTest, LevelOneIsUnion) {
  const SubsetFamily f = Triangle();
  EXPECT_EQ(IntersectLevel(f, IndexSet::Of({1, 2}), 1),
            f.set(1) | f.set(2));
  EXPECT_EQ(IntersectLevel(f, IndexSet::Of({3}), 1), f.set(3));
}

TEST(IntersectLevelTest, RejectsBadParameters) {
  const SubsetFamily f = Triangle();
  EXPECT_THROW(IntersectLevel(f, IndexSet(), 1), DomainError);
  EXPECT_THROW(IntersectLevel(f, IndexSet::Of({1, 2}), 0), DomainError);
  EXPECT_THROW(IntersectLevel(f, IndexSet::Of({1, 2}), 3), DomainError);
  EXPECT_THROW(IntersectLevel(f, IndexSet::Of({4}), 1), DomainError);
}

TEST(IntersectLevelTest, MatchesSubsetEnumerationOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 7);
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto masks = RandomMasks(rng, k, n);
    SubsetFamily fam(GroundSet::Create(n), masks);
    std::vector<testing::Set> sets;
    for (auto m : masks) sets.push_back(FromMask(m));
    const auto u = IndexSet::FromMask(
        1 + static_cast<std::uint32_t>(rng() % ((1u << k) - 1)));
    for (int r = 1; r <= u.size(); ++r) {
      EXPECT_EQ(FromMask(IntersectLevel(fam, u, r).mask()),
                LevelOracle(sets, u.members(), r));
    }
  }
}

TEST(IntersectLevelTest, LevelsShrinkAndGrowWithU) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const auto masks = RandomMasks(rng, k, 10);
    SubsetFamily fam(GroundSet::Create(10), masks);
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t um = 1; um <= full; ++um) {
      const IndexSet u = IndexSet::FromMask(um);
      std::uint64_t meet = ~std::uint64_t{0}, join = 0;
      for (int i : u.members()) {
        meet &= masks[i - 1];
        join |= masks[i - 1];
      }
      EXPECT_EQ(IntersectLevel(fam, u, 1).mask(), join);
      EXPECT_EQ(IntersectLevel(fam, u, u.size()).mask(), meet);
      for (int r = 1; r < u.size(); ++r) {
        EXPECT_TRUE(IntersectLevel(fam, u, r + 1).IsSubsetOf(
            IntersectLevel(fam, u, r)));
      }
      // Every nonempty U' inside U has smaller levels.
      for (std::uint32_t sub = um; sub != 0; sub = (sub - 1) & um) {
        const IndexSet v = IndexSet::FromMask(sub);
        for (int r = 1; r <= v.size(); ++r) {
          EXPECT_TRUE(IntersectLevel(fam, v, r).IsSubsetOf(
              IntersectLevel(fam, u, r)));
        }
      }
    }
  }
}

TEST(ElementSetTest, GroundSetsAreComparedByIdentity) {
  GroundRef a = GroundSet::Create(3);
  GroundRef b = GroundSet::Create(3);
  EXPECT_THROW(ElementSet::Of(a, {0}) | ElementSet::Of(b, {1}),
               GroundMismatchError);
  EXPECT_THROW(SubsetFamily(a, {ElementSet::Of(b, {0})}), GroundMismatchError);
  EXPECT_THROW(ElementSet::Of(a, {3}), DomainError);
  EXPECT_THROW(GroundSet::Create(65), DomainError);
  EXPECT_THROW(GroundSet::Create({"x", "x"}), DomainError);
}

TEST(ElementSetTest, LabelsRenderInToString) {
  GroundRef g = GroundSet::Create({"a", "b", "c"});
  EXPECT_EQ(ElementSet::Of(g, {0, 2}).ToString(), "{a,c}");
  EXPECT_EQ(g->IndexOf("b"), 1);
  EXPECT_FALSE(g->IndexOf("z").has_value());
}

TEST(AugmentedFamilyTest, DisjointPair) {
  GroundRef g = GroundSet::Create(3);
  SubsetFamily f(g, {ElementSet::Of(g, {1}), ElementSet::Of(g, {2})});
  const SubsetFamily aug = AugmentedFamily(f, 1, 2);
  ASSERT_EQ(aug.size(), 2);
  EXPECT_EQ(aug.set(1).members(), std::vector<int>{1});
  EXPECT_EQ(aug.set(2).members(), std::vector<int>{2});
}

TEST(AugmentedFamilyTest, NestedChainKeepsLastSet) {
  GroundRef g = GroundSet::Create(5);
  SubsetFamily f(g, {ElementSet::Of(g, {0}), ElementSet::Of(g, {0, 1}),
                     ElementSet::Of(g, {0, 1, 2}),
                     ElementSet::Of(g, {0, 1, 2, 3})});
  for (int j = 2; j <= 4; ++j) {
    const SubsetFamily aug = AugmentedFamily(f, j - 1, j);
    EXPECT_EQ(aug.set(j), f.set(j));
  }
}

TEST(AugmentedFamilyTest, TriangleThirdSetBecomesEverything) {
  const SubsetFamily aug = AugmentedFamily(Triangle(), 1, 3);
  EXPECT_EQ(aug.set(1).members(), (std::vector<int>{1, 2}));
  EXPECT_EQ(aug.set(3).members(), (std::vector<int>{1, 2, 3}));
}

TEST(AugmentedFamilyTest, RejectsBadParameters) {
  const SubsetFamily f = Triangle();
  EXPECT_THROW(AugmentedFamily(f, 0, 2), DomainError);
  EXPECT_THROW(AugmentedFamily(f, 2, 2), DomainError);
  EXPECT_THROW(AugmentedFamily(f, 1, 4), DomainError);
  EXPECT_THROW(AugmentedLevelIdentityHolds(f, 3, 3), DomainError);
}

TEST(AugmentedIdentityTest, EqualSetsCollapse) {
  GroundRef g = GroundSet::Create(6);
  const ElementSet s = ElementSet::Of(g, {0, 3, 5});
  SubsetFamily f(g, {s, s, s, s, s});
  for (int j = 2; j <= 5; ++j) {
    for (int rp = 1; rp < j; ++rp) {
      EXPECT_TRUE(AugmentedLevelIdentityHolds(f, rp, j));
    }
  }
}

TEST(AugmentedIdentityTest, Triangle) {
  EXPECT_TRUE(AugmentedLevelIdentityHolds(Triangle(), 1, 3));
  EXPECT_TRUE(AugmentedLevelIdentityHolds(Triangle(), 2, 3));
}

// Independent route: build G by the oracle and compare its levels with the
// closed form, all via LevelOracle.
bool IdentityByOracle(const std::vector<std::uint64_t>& masks, int rp, int j) {
  std::vector<testing::Set> s;
  for (auto m : masks) s.push_back(FromMask(m));
  auto range = [](int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return v;
  };
  std::vector<testing::Set> g;
  for (int r = 1; r <= j; ++r) {
    g.push_back(r <= rp ? s[r - 1]
                        : testing::Union(s[r - 1],
                                         LevelOracle(s, range(r), rp + 1)));
  }
  for (int r = 1; r <= j; ++r) {
    const auto lhs = LevelOracle(g, range(j), r);
    const auto rhs = r <= rp ? LevelOracle(s, range(j), r)
                             : LevelOracle(s, range(j - r + rp + 1), rp + 1);
    if (lhs != rhs) return false;
  }
  return true;
}

TEST(AugmentedIdentityTest, RandomFamiliesAgreeWithOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const auto masks = RandomMasks(rng, k, 6);
    SubsetFamily f(GroundSet::Create(6), masks);
    for (int j = 2; j <= k; ++j) {
      for (int rp = 1; rp < j; ++rp) {
        ASSERT_TRUE(AugmentedLevelIdentityHolds(f, rp, j));
        ASSERT_TRUE(IdentityByOracle(masks, rp, j));
      }
    }
  }
}

TEST(AugmentedIdentityTest, ExhaustiveSmallAndRandomMedium) {
  // Every family of K <= 4 subsets of a 3-element ground set.
  for (int k = 2; k <= 4; ++k) {
    const int total = 1 << (3 * k);
    for (int code = 0; code < total; ++code) {
      std::vector<std::uint64_t> masks(k);
      for (int i = 0; i < k; ++i) masks[i] = (code >> (3 * i)) & 7;
      SubsetFamily f(GroundSet::Create(3), masks);
      for (int rp = 1; rp < k; ++rp) {
        ASSERT_TRUE(AugmentedLevelIdentityHolds(f, rp, k));
      }
    }
  }
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 8);
    SubsetFamily f(GroundSet::Create(n), RandomMasks(rng, k, n));
    for (int rp = 1; rp < k; ++rp) {
      ASSERT_TRUE(AugmentedLevelIdentityHolds(f, rp, k));
    }
  }
}

}  // namespace
}  // namespace gcsb
