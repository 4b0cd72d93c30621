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

#ifndef SUPERTOKEN_INVARIANTS_HPP_
#define SUPERTOKEN_INVARIANTS_HPP_

#include <string>
#include <vector>

#include "supertoken/graph.hpp"
#include "supertoken/tokens.hpp"

namespace supertoken {

enum class CertificateKind {
  kIndependentSet,
  kClique,
  kColoring,
  kMatching,
  kResolvingSet,
};

const char* CertificateKindName(CertificateKind kind);

// Value of an invariant together with a witness that can be checked against
// the graph without trusting the solver.
struct Certificate {
  CertificateKind kind = CertificateKind::kIndependentSet;
  int value = 0;
  std::vector<int> vertices;  // independent set, clique, resolving set
  std::vector<int> colors;    // colouring: colour of each vertex
  std::vector<Edge> matching; // matching: (C1 vertex, C2 vertex)
};

// Checks the witness only (not optimality).
bool VerifyCertificate(const Graph& g, const Certificate& cert);

inline constexpr int kIndependenceGuard = 120;
inline constexpr int kCliqueGuard = 120;
inline constexpr int kChromaticGuard = 80;
inline constexpr int kMetricDimensionGuard = 16;

// Maximum clique by bitset branch-and-bound with greedy-colouring bounds.
Certificate CliqueNumber(const Graph& g, bool force = false);

// alpha(G). Bipartite graphs go through Koenig's theorem; everything else
// through the clique solver on the complement.
Certificate IndependenceNumber(const Graph& g, bool force = false);
// Always the branch-and-bound route (used to cross-check the Koenig route).
Certificate IndependenceNumberBranchAndBound(const Graph& g, bool force = false);
// Koenig route; throws invalid-parameter on non-bipartite input.
Certificate IndependenceNumberKoenig(const Graph& g);

// chi(G): lower bound from the clique number (and odd cycles), upper bound from
// DSATUR, then exact k-colourability backtracking in between.
Certificate ChromaticNumber(const Graph& g, bool force = false);

// Maximum matching between the sides of a bipartition by augmenting paths.
// Throws invalid-parameter if (c1, c2) is not a bipartition of g.
Certificate MaxBipartiteMatching(const Graph& g, const std::vector<int>& c1,
                                 const std::vector<int>& c2);

// min deg over c1 >= delta and max deg over c2 <= delta.
bool HallDegreeCondition(const Graph& g, const std::vector<int>& c1,
                         const std::vector<int>& c2, int delta);

// When the degree condition holds and |c1| <= |c2|, checks alpha(g) == |c2|
// with the exact solver and throws property-violation otherwise. Returns
// whether the check applied.
bool CheckHallConsequence(const Graph& g, const std::vector<int>& c1,
                          const std::vector<int>& c2, int delta,
                          bool force = false);

// Minimum resolving set by subset enumeration in increasing size.
Certificate MetricDimension(const Graph& g, bool force = false);

enum class TriangleType { kType1, kType2, kNotATriangle };

const char* TriangleTypeName(TriangleType type);

struct TriangleClass {
  TriangleType type = TriangleType::kNotATriangle;
  // Vertices of the base graph spanned by the moving tokens, ascending.
  std::vector<int> projected;
};

// True iff b = a - e_x + e_y for an edge xy of g.
bool ConfigsAdjacent(const Graph& g, const TokenConfig& a, const TokenConfig& b);

// Type 1: the three configurations share a common (k-1)-multiset; Type 2: one
// is contained in the multiset union of the other two.
TriangleClass ClassifyTriangle(const Graph& g, const TokenConfig& a,
                               const TokenConfig& b, const TokenConfig& c);

struct CliqueCensus {
  int clique_number = 0;
  int maximal_cliques = 0;      // all maximal cliques, any size
  int type1 = 0;                // maximal cliques of size >= 3 by type
  int type2 = 0;
  int maximum_cliques = 0;      // maximal cliques of size clique_number
  int maximum_type1 = 0;
  int maximum_type2 = 0;
  int triangles_type1 = 0;      // all 3-cliques (not only maximal ones)
  int triangles_type2 = 0;
};

// Classifies every maximal clique of size >= 3 of `supertoken` (whose labels
// must be configuration strings over `base`) and checks that each projects to
// a clique of `base` of the same size. Throws property-violation otherwise.
CliqueCensus CliqueTypeCensus(const Graph& base, const Graph& supertoken,
                              bool force = false);

}  // namespace supertoken

#endif  // SUPERTOKEN_INVARIANTS_HPP_
