// Copyright 2026 The Supertoken Authors
//
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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "supertoken/bounds.hpp"
#include "supertoken/error.hpp"
#include "supertoken/invariants.hpp"

namespace supertoken {
namespace {

TEST(Binomials, Exact) {
  EXPECT_EQ(BigBinomial(100, 50).str(), "100891344545564193334812497256");
  EXPECT_EQ(BigBinomial(4, 5), 0);
  EXPECT_EQ(MultisetBinomial(4, 2), 10);
  EXPECT_EQ(MultisetBinomial(5, 0), 1);
}

TEST(BipartiteBound, MatchesCountingOracle) {
  for (int c1 = 1; c1 <= 5; ++c1)
    for (int c2 = 1; c2 <= 5; ++c2)
      for (int k = 0; k <= 5; ++k) {
        EXPECT_EQ(BipartiteBound(c1, c2, k), oracle::EvenSideMultisets(c1, c2, k))
            << c1 << " " << c2 << " " << k;
      }
}

TEST(BipartiteBound, StableSetsAreIndependent) {
  for (const Graph& g : {MakeHypercube(3), MakeCycle(6), MakePath(5), MakeStar(3)}) {
    for (int k = 1; k <= 3; ++k) {
      const Graph st = SupertokenGraph(g, k);
      const StableSets s = BipartiteStableSets(g, k);
      for (const auto* set : {&s.s1, &s.s2})
        for (std::size_t i = 0; i < set->size(); ++i)
          for (std::size_t j = i + 1; j < set->size(); ++j)
            EXPECT_FALSE(st.adjacent((*set)[i], (*set)[j]));
      EXPECT_EQ(static_cast<int>(s.s1.size() + s.s2.size()), st.num_vertices());
      const int c1 = static_cast<int>(s.c1.size()), c2 = static_cast<int>(s.c2.size());
      EXPECT_EQ(BipartiteBound(c1, c2, k), static_cast<int>(s.s2.size()));
      EXPECT_LE(BipartiteBound(c1, c2, k), IndependenceNumber(st).value);
    }
  }
  EXPECT_THROW(BipartiteStableSets(MakeCycle(5), 2), Error);
}

TEST(PartitionBound, WitnessIsIndependentAndSized) {
  const Graph c20 = MakeCyclePower(20, 4);
  const Certificate chi = ChromaticNumber(c20);
  ColorClassPartition p;
  p.coloring = chi.colors;
  p.k = 3;
  p.groups = {{{0, 1, 2}, {1, 1, 1}}, {{3}, {3}}, {{4}, {3}}};
  EXPECT_EQ(PartitionBound(c20, p), 104);
  const auto witness = PartitionWitness(c20, p, true);
  EXPECT_EQ(witness.size(), 104u);
  for (std::size_t i = 0; i < witness.size(); ++i)
    for (std::size_t j = i + 1; j < witness.size(); ++j)
      EXPECT_FALSE(ConfigsAdjacent(c20, witness[i], witness[j]));
}

TEST(PartitionBound, LowerBoundsExactAlpha) {
  std::mt19937 rng(17);
  for (int t = 0; t < 10; ++t) {
    const Graph g = oracle::RandomGraph(rng, 6, 50);
    const Certificate chi = ChromaticNumber(g);
    for (int k = 2; k <= 3; ++k) {
      const BestPartition best = BestPartitionBound(g, chi.colors, k);
      EXPECT_LE(best.value, IndependenceNumber(SupertokenGraph(g, k)).value);
      EXPECT_EQ(best.value, PartitionBound(g, best.partition));
    }
  }
}

TEST(PartitionBound, Validation) {
  const Graph c4 = MakeCycle(4);
  ColorClassPartition p;
  p.coloring = {0, 1, 0, 1};
  p.k = 1;
  p.groups = {{{0}, {1}}, {{1}, {1}}};
  EXPECT_THROW(ValidatePartition(c4, p), Error);  // k = 1 needs one group
  p.groups = {{{0, 1}, {1, 0}}};
  EXPECT_THROW(ValidatePartition(c4, p), Error);  // zero token count
  p.coloring = {0, 0, 1, 1};
  p.groups = {{{0}, {2}}, {{1}, {2}}};
  p.k = 2;
  EXPECT_THROW(ValidatePartition(c4, p), Error);  // improper colouring
}

TEST(PartitionBound, GroupingRowsForCyclePower) {
  const std::vector<int> sizes(5, 4);
  EXPECT_EQ(GroupingBound(sizes, {1, 1, 1, 1, 1}, 3), 100);
  EXPECT_EQ(GroupingBound(sizes, {2, 1, 1, 1}, 3), 100);
  EXPECT_EQ(GroupingBound(sizes, {2, 2, 1}, 3), 100);
  EXPECT_EQ(GroupingBound(sizes, {3, 1, 1}, 3), 104);
  EXPECT_EQ(GroupingBound(sizes, {3, 2}, 3), 104);
  const Graph c20 = MakeCyclePower(20, 4);
  EXPECT_EQ(BestPartitionBound(c20, ChromaticNumber(c20).colors, 3).value, 104);
}

TEST(AlphaFormulas, TwoCycleAgainstSolver) {
  for (int n = 3; n <= 11; ++n) {
    const Graph st = SupertokenGraph(MakeCycle(n), 2);
    EXPECT_EQ(AlphaSupertoken2Cycle(n), oracle::Alpha(st)) << n;
    const auto set = IndependentSet2Cycle(n);
    EXPECT_EQ(static_cast<std::int64_t>(set.size()), AlphaSupertoken2Cycle(n));
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        EXPECT_FALSE(ConfigsAdjacent(MakeCycle(n), set[i], set[j]));
  }
  EXPECT_THROW(AlphaSupertoken2Cycle(1), Error);
}

TEST(AlphaFormulas, AugmentedAgainstSolver) {
  for (int n = 3; n <= 8; ++n)
    for (int p = 0; p <= 4; ++p)
      EXPECT_EQ(AlphaAugmented(n, p), IndependenceNumber(AugmentedTwoTokenCycle(n, p)).value)
          << n << " " << p;
}

TEST(Rates, Values) {
  EXPECT_NEAR(InformationRate(20, 2), 2.1609640474436813, 1e-12);
  EXPECT_NEAR(InformationRate(104, 3), 2.2334799060470, 1e-12);
  EXPECT_THROW(InformationRate(0, 2), Error);
  EXPECT_THROW(InformationRate(4, 0), Error);
}

TEST(Table3, RowsMatchOracle) {
  for (int c = 1; c <= 7; ++c) {
    const auto row = Table3Row(c, 9);
    ASSERT_EQ(row.size(), 10u);
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(row[k], oracle::EvenSideMultisets(c, c, k));
  }
  EXPECT_EQ(Table3Row(5, 9)[8], oracle::EvenSideMultisets(5, 5, 8));
  EXPECT_EQ(Table3Row(5, 9)[8], 12190);
}

}  // namespace
}  // namespace supertoken
