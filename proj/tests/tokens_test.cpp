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
#include "supertoken/error.hpp"
#include "supertoken/isomorphism.hpp"
#include "supertoken/kernels.hpp"
#include "supertoken/tokens.hpp"

namespace supertoken {
namespace {

TEST(ConfigSpace, RankUnrankBijection) {
  for (auto kind : {ConfigSpace::Kind::kMultisets, ConfigSpace::Kind::kSubsets}) {
    for (int n = 1; n <= 7; ++n) {
      for (int k = 1; k <= 4; ++k) {
        if (kind == ConfigSpace::Kind::kSubsets && k > n) continue;
        const ConfigSpace space(n, k, kind);
        const int cap = kind == ConfigSpace::Kind::kMultisets ? k : 1;
        EXPECT_EQ(space.size(), oracle::CountVectors(n, k, cap).size());
        std::vector<int> buf(k);
        for (std::uint64_t r = 0; r < space.size(); ++r) {
          space.Unrank(r, buf);
          EXPECT_TRUE(std::is_sorted(buf.begin(), buf.end()));
          EXPECT_EQ(space.Rank(buf), r);
        }
      }
    }
  }
}

TEST(ConfigSpace, ColexOrder) {
  const ConfigSpace space(3, 2, ConfigSpace::Kind::kMultisets);
  std::vector<std::string> labels;
  std::vector<int> buf(2);
  for (std::uint64_t r = 0; r < space.size(); ++r) {
    space.Unrank(r, buf);
    labels.push_back(std::to_string(buf[0]) + std::to_string(buf[1]));
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"00", "01", "11", "02", "12", "22"}));
}

TEST(TokenConfig, LabelsAndRanks) {
  const std::vector<int> ms = {0, 0, 3};
  const TokenConfig c = TokenConfig::FromMultiset(5, ms);
  EXPECT_EQ(c.counts, (std::vector<int>{2, 0, 0, 1, 0}));
  EXPECT_EQ(c.Label(), "0,0,3");
  EXPECT_EQ(TokenConfig::FromLabel(5, "0,0,3"), c);
  EXPECT_EQ(UnrankConfig(RankConfig(c), 5, 3), c);
  EXPECT_THROW(UnrankConfig(MultisetCount(5, 3), 5, 3), Error);
  EXPECT_THROW(TokenConfig::FromLabel(5, "0,7"), Error);
}

TEST(TokenConfig, Counts) {
  EXPECT_EQ(Binomial(10, 3), 120u);
  EXPECT_EQ(Binomial(3, 5), 0u);
  EXPECT_EQ(MultisetCount(4, 3), 20u);
  EXPECT_EQ(MultisetCount(20, 3), 1540u);
}

// Constructions against an independent enumeration of count vectors.
TEST(Constructions, SupertokenMatchesNaiveEnumeration) {
  std::mt19937 rng(3);
  std::vector<Graph> graphs = {MakeCycle(5), MakePath(4), MakeComplete(4), MakePetersen(),
                               MakeHypercube(3)};
  for (int i = 0; i < 8; ++i) graphs.push_back(oracle::RandomGraph(rng, 6, 45));
  for (const Graph& g : graphs) {
    for (int k = 1; k <= 3; ++k) {
      const Graph st = SupertokenGraph(g, k);
      EXPECT_EQ(static_cast<std::uint64_t>(st.num_vertices()), MultisetCount(g.num_vertices(), k));
      EXPECT_EQ(oracle::LabelledEdges(st), oracle::TokenMoveEdges(g, k, k));
      EXPECT_EQ(st.num_edges(), g.num_edges() * MultisetCount(g.num_vertices(), k - 1));
      if (k <= g.num_vertices()) {
        const Graph tk = TokenGraph(g, k);
        EXPECT_EQ(oracle::LabelledEdges(tk), oracle::TokenMoveEdges(g, k, 1));
      }
    }
  }
}

TEST(Constructions, OneTokenIsTheBaseGraph) {
  const Graph pet = MakePetersen();
  EXPECT_TRUE(IsIsomorphic(SupertokenGraph(pet, 1), pet));
}

TEST(Constructions, GuardAndForce) {
  try {
    SupertokenGraph(MakeCycle(100), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
  EXPECT_THROW(SupertokenGraph(MakeCycle(5), 0), Error);
  EXPECT_THROW(TokenGraph(MakeCycle(3), 4), Error);
}

TEST(Constructions, Products) {
  const Graph c5 = MakeCycle(5);
  const Graph strong = StrongProduct(c5, c5);
  EXPECT_EQ(strong.num_vertices(), 25);
  // |E(G x H)| = |V(G)||E(H)| + |V(H)||E(G)| + 2|E(G)||E(H)|
  EXPECT_EQ(strong.num_edges(), 5u * 5 + 5 * 5 + 2 * 5 * 5);
  EXPECT_EQ(StrongPower(c5, 2), strong);
  EXPECT_EQ(StrongPower(MakePath(2), 3).num_edges(), 28u);  // K_8
  const Graph cart = CartesianProduct(MakePath(2), MakePath(2));
  EXPECT_TRUE(IsIsomorphic(cart, MakeCycle(4)));
  EXPECT_TRUE(IsIsomorphic(CartesianPower(MakePath(2), 3), MakeHypercube(3)));
  EXPECT_EQ(strong.label(7), "(1,2)");
}

TEST(Constructions, AugmentedCounts) {
  for (int n = 3; n <= 9; ++n) {
    for (int p = 0; p <= 4; ++p) {
      const Graph g = AugmentedTwoTokenCycle(n, p);
      EXPECT_EQ(g.num_vertices(), n * (n - 1) / 2 + p * n);
      EXPECT_EQ(static_cast<int>(g.num_edges()), n * (n - 2) + 2 * p * n);
      const auto verts = AugmentedVertices(n, p);
      ASSERT_EQ(static_cast<int>(verts.size()), g.num_vertices());
      for (int v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(g.label(v), verts[v].Label());
    }
  }
  EXPECT_EQ(AugmentedVertices(5, 1)[10].Label(), "{0,0}^1");
}

TEST(Constructions, AugmentedSmallCases) {
  for (int n = 4; n <= 7; ++n) {
    EXPECT_TRUE(IsIsomorphic(AugmentedTwoTokenCycle(n, 0), TokenGraph(MakeCycle(n), 2)));
    EXPECT_TRUE(IsIsomorphic(AugmentedTwoTokenCycle(n, 1), SupertokenGraph(MakeCycle(n), 2)));
  }
}

TEST(Embeddings, InducedChains) {
  for (const Graph& g : {MakeCycle(5), MakePath(4), MakeComplete(4)}) {
    const int n = g.num_vertices();
    const Graph f2 = TokenGraph(g, 2);
    const Graph s2 = SupertokenGraph(g, 2);
    const Graph s3 = SupertokenGraph(g, 3);
    EXPECT_TRUE(IsInducedEmbedding(f2, s2, EmbedToken(n, 2)));
    for (int anchor = 0; anchor < n; ++anchor)
      EXPECT_TRUE(IsInducedEmbedding(s2, s3, EmbedSupertoken(n, 2, anchor)));
  }
  // A map that is not injective is rejected.
  const Graph c4 = MakeCycle(4);
  const std::vector<int> bad = {0, 0, 1, 2};
  EXPECT_FALSE(IsInducedEmbedding(c4, c4, bad));
}

TEST(Kernels, ParallelMatchesSerial) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = oracle::RandomGraph(rng, 9, 35);
    for (auto kind : {ConfigSpace::Kind::kMultisets, ConfigSpace::Kind::kSubsets}) {
      const ConfigSpace space(9, 3, kind);
      EXPECT_EQ(kernels::TokenMoveAdjacencySerial(g, space),
                kernels::TokenMoveAdjacencyParallel(g, space));
    }
    EXPECT_EQ(kernels::EccentricitiesSerial(g), kernels::EccentricitiesParallel(g));
  }
  const Graph big = SupertokenGraph(MakeCycle(12), 3);
  EXPECT_EQ(kernels::EccentricitiesSerial(big), kernels::EccentricitiesParallel(big));
  EXPECT_GE(kernels::MaxThreads(), 1);
}

}  // namespace
}  // namespace supertoken
