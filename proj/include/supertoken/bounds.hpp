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

#ifndef SUPERTOKEN_BOUNDS_HPP_
#define SUPERTOKEN_BOUNDS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "supertoken/graph.hpp"
#include "supertoken/tokens.hpp"

namespace supertoken {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k), zero outside 0 <= k <= n.
BigInt BigBinomial(int n, int k);
// Number of pi-multisets over c symbols, C(c + pi - 1, pi).
BigInt MultisetBinomial(int c, int pi);

// One block of colour classes together with the number of tokens each class
// receives. `colors` and `tokens` are parallel.
struct ColorGroup {
  std::vector<int> colors;
  std::vector<int> tokens;
};

struct ColorClassPartition {
  std::vector<int> coloring;  // vertex -> colour in 0..chi-1
  std::vector<ColorGroup> groups;
  int k = 0;

  int num_colors() const;
  std::vector<int> class_sizes() const;
};

// Throws invalid-parameter unless: the colouring is proper and uses every
// colour 0..chi-1, each colour lies in exactly one group, each group has
// 1 <= tau <= k classes with positive token counts summing to k. For k = 1
// the bound only holds with a single group, so k = 1 requires sigma = 1.
void ValidatePartition(const Graph& g, const ColorClassPartition& p);

// sum over groups of prod_h C(c_h + pi_h - 1, pi_h).
BigInt PartitionBound(const Graph& g, const ColorClassPartition& p);

// Value of one group for the best composition of k over its classes.
BigInt BestGroupValue(const std::vector<int>& class_sizes, int k);

// Bound for the grouping that puts the classes, in order, into consecutive
// blocks of the given sizes, each with its best composition. E.g. sizes
// {4,4,4,4,4}, blocks {3,1,1}, k = 3 gives 4^3 + 2 C(6,3) = 104.
BigInt GroupingBound(const std::vector<int>& class_sizes,
                     const std::vector<int>& block_sizes, int k);

struct HeuristicStats {
  std::int64_t blocks = 0;    // blocks with at least two classes
  std::int64_t balanced = 0;  // ... whose maximum is hit by a composition
                              // with parts differing by at most one
};

struct BestPartition {
  BigInt value;
  ColorClassPartition partition;
  std::int64_t partitions_enumerated = 0;
  HeuristicStats heuristic;
};

inline constexpr int kBestPartitionMaxColors = 8;
inline constexpr int kBestPartitionMaxTokens = 5;

// Exhaustive maximum over set partitions of the colour classes (restricted
// growth strings in lexicographic order) and token compositions. The first
// partition reaching the maximum wins.
BestPartition BestPartitionBound(const Graph& g, const std::vector<int>& coloring,
                                 int k, bool force = false);

// The configurations behind PartitionBound, in rank order.
std::vector<TokenConfig> PartitionWitness(const Graph& g,
                                          const ColorClassPartition& p,
                                          bool force = false);

// sum_{i=0}^{floor(k/2)} C(c1 + 2i - 1, 2i) C(c2 + k - 2i - 1, k - 2i).
BigInt BipartiteBound(int c1, int c2, int k);

struct StableSets {
  std::vector<int> c1, c2;  // bipartition of the base graph, |c1| <= |c2|
  std::vector<int> s1, s2;  // ranks with an odd / even number of tokens on c1
};

// Throws invalid-parameter if g is not bipartite.
StableSets BipartiteStableSets(const Graph& g, int k);

// alpha(F_2(C_n)): r(n+2) for n = 4r, 4r+1 and (r+1)n for n = 4r+2, 4r+3.
std::int64_t AlphaSupertoken2Cycle(int n);

// Explicit independent set of F_2(C_n) of size AlphaSupertoken2Cycle(n),
// in rank order. Duplicates are merged before the size is checked.
std::vector<TokenConfig> IndependentSet2Cycle(int n);

// alpha(F_2^p(C_n)) from the closed form, evaluated exactly. Throws
// formula-inconsistency if the value is not an integer or the p = 0, 1
// values disagree with the independent closed forms.
Rational AlphaAugmented(int n, int p);

// log2(alpha) / k.
double InformationRate(const BigInt& alpha, int k);
// Lower bound on alpha(F_k(G)) used for the capacity estimate.
BigInt ShannonLowerBound(const Graph& g, const ColorClassPartition& p);

// BipartiteBound(c, c, k) for k = 0..k_max.
std::vector<BigInt> Table3Row(int c, int k_max);

}  // namespace supertoken

#endif  // SUPERTOKEN_BOUNDS_HPP_
