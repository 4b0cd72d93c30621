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

#ifndef SUPERTOKEN_TOKENS_HPP_
#define SUPERTOKEN_TOKENS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "supertoken/graph.hpp"

namespace supertoken {

// Placement of k indistinguishable tokens on the n vertices of a base graph.
struct TokenConfig {
  std::vector<int> counts;

  int num_tokens() const;
  // Vertex indices with repetition, ascending.
  std::vector<int> Multiset() const;
  // "v1,v2,...,vk" over the sorted multiset.
  std::string Label() const;

  static TokenConfig FromMultiset(int n, std::span<const int> multiset);
  // Parses a Label() string.
  static TokenConfig FromLabel(int n, const std::string& label);

  friend bool operator==(const TokenConfig&, const TokenConfig&) = default;
};

std::uint64_t Binomial(int n, int k);
// C(n + k - 1, k), the number of k-multisets on n symbols.
std::uint64_t MultisetCount(int n, int k);

// Colexicographic ranking of token placements on n vertices with k tokens.
//
// With `max_per_vertex == k` the space is all k-multisets (the supertoken
// vertex set); with `max_per_vertex == 1` it is all k-subsets (the token graph
// vertex set). A multiset a_0 <= ... <= a_{k-1} is ranked through the
// strictly increasing b_i = a_i + i, so both cases share the combinatorial
// number system: rank = sum_i C(b_i, i + 1).
class ConfigSpace {
 public:
  enum class Kind { kMultisets, kSubsets };

  ConfigSpace(int n, int k, Kind kind);

  int n() const { return n_; }
  int k() const { return k_; }
  Kind kind() const { return kind_; }
  std::uint64_t size() const { return size_; }

  // `sorted` must be an ascending multiset (strictly ascending for subsets).
  std::uint64_t Rank(std::span<const int> sorted) const;
  // Writes the sorted multiset of the given rank into `out` (size k).
  void Unrank(std::uint64_t rank, std::span<int> out) const;

 private:
  std::uint64_t choose(int x, int j) const {
    return table_[static_cast<std::size_t>(x) * (k_ + 1) + j];
  }

  int n_;
  int k_;
  Kind kind_;
  int offset_;  // 1 for multisets, 0 for subsets
  std::uint64_t size_;
  std::vector<std::uint64_t> table_;
};

std::uint64_t RankConfig(const TokenConfig& config);
// Throws invalid-parameter if rank >= C(n + k - 1, k).
TokenConfig UnrankConfig(std::uint64_t rank, int n, int k);

inline constexpr std::uint64_t kConstructionGuard = 100000;

// k-supertoken graph: vertices are all k-multisets in rank order; u ~ v iff
// v = u - e_a + e_b for an edge ab of g. Labels are the multiset strings.
Graph SupertokenGraph(const Graph& g, int k, bool force = false);

// k-token graph: the 0/1 configurations of the supertoken graph.
Graph TokenGraph(const Graph& g, int k, bool force = false);

// Vertex (u, v) has index u * |H| + v. Labels are "(a,b)" over the factor
// labels; powers flatten to "(a,b,c)".
Graph StrongProduct(const Graph& g, const Graph& h, bool force = false);
Graph StrongPower(const Graph& g, int k, bool force = false);
Graph CartesianProduct(const Graph& g, const Graph& h, bool force = false);
Graph CartesianPower(const Graph& g, int k, bool force = false);

// Vertex of the p-augmented 2-token graph of a cycle.
struct AugmentedVertex {
  int i = 0;
  int j = 0;  // i <= j; i == j only on odd layers
  int layer = 0;

  std::string Label() const;  // "{i,j}^layer"
  friend bool operator==(const AugmentedVertex&, const AugmentedVertex&) = default;
};

// Layer 0 is F_2(C_n) in subset rank order. Layer r >= 1 follows in blocks of
// n vertices: odd layers hold {i,i}^r (adjacent to {i,i+1}^{r-1} and
// {i-1,i}^{r-1}), even layers hold {i,i+1}^r (adjacent to {i,i}^{r-1} and
// {i+1,i+1}^{r-1}), indices mod n, i = 0..n-1 within each block.
Graph AugmentedTwoTokenCycle(int n, int p, bool force = false);
std::vector<AugmentedVertex> AugmentedVertices(int n, int p);

// Maps rank of config c in F_k(g) to rank of c + e_anchor in F_{k+1}(g).
std::vector<int> EmbedSupertoken(int n, int k, int anchor);
// Maps rank of a k-subset in the token graph to its rank in the supertoken graph.
std::vector<int> EmbedToken(int n, int k);

// True iff `map` is injective and u ~ v in `small` <=> map[u] ~ map[v] in `big`.
bool IsInducedEmbedding(const Graph& small, const Graph& big,
                        std::span<const int> map);

}  // namespace supertoken

#endif  // SUPERTOKEN_TOKENS_HPP_
