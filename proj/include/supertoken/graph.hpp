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

#ifndef SUPERTOKEN_GRAPH_HPP_
#define SUPERTOKEN_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "supertoken/bitset.hpp"

namespace supertoken {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertices 0..n-1.
//
// Neighbour lists are kept sorted strictly ascending. For graphs up to
// kBitMatrixLimit vertices a symmetric bit-matrix is kept alongside them so
// adjacency tests are O(1); larger graphs fall back to binary search. A Graph
// is immutable once built.
class Graph {
 public:
  static constexpr int kBitMatrixLimit = 8192;

  Graph() = default;

  // Validates: endpoints in range, no self-loops, no repeated edges. Edges may
  // be given in any order and orientation. Missing labels default to "i".
  static Graph FromEdges(int n, std::span<const Edge> edges,
                         std::vector<std::string> labels = {},
                         std::string name = {});

  // Builds from per-vertex neighbour lists. Lists are sorted here; symmetry,
  // self-loops and duplicates are rejected.
  static Graph FromAdjacency(std::vector<std::vector<int>> adjacency,
                             std::vector<std::string> labels = {},
                             std::string name = {});

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

  // Row v of the bit-matrix; only valid when has_bit_matrix().
  bool has_bit_matrix() const { return num_vertices() <= kBitMatrixLimit; }
  const DynamicBitset& row(int v) const { return bits_[v]; }

  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  Graph WithName(std::string name) const;
  Graph WithLabels(std::vector<std::string> labels) const;

  // Vertex v of this graph becomes vertex perm[v] of the result; labels move
  // with their vertices.
  Graph Permuted(std::span<const int> perm) const;

  Graph Complement() const;

  // Subgraph induced by `vertices` (in the given order).
  Graph InducedSubgraph(std::span<const int> vertices) const;

  // Structural and label equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  Graph(std::vector<std::vector<int>> adjacency, std::vector<std::string> labels,
        std::string name);

  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
  std::string name_;
  std::size_t num_edges_ = 0;
  std::vector<DynamicBitset> bits_;
};

// Disjoint non-empty vertex classes covering 0..n-1.
class VertexPartition {
 public:
  VertexPartition() = default;

  // Throws invalid-parameter unless the classes partition 0..n-1.
  static VertexPartition FromClasses(int n, std::vector<std::vector<int>> classes);

  // Each vertex in its own class.
  static VertexPartition Discrete(int n);

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& cls(int i) const { return classes_[i]; }
  int class_of(int v) const { return class_of_[v]; }
  std::vector<int> sizes() const;

 private:
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

enum class QuotientFlavor { kAdjacency, kLaplacian };

// Square matrix indexed by partition classes, stored row-major.
struct QuotientMatrix {
  int dimension = 0;
  std::vector<double> entries;
  std::vector<int> class_sizes;
  QuotientFlavor flavor = QuotientFlavor::kAdjacency;

  double at(int i, int j) const { return entries[i * dimension + j]; }
  double& at(int i, int j) { return entries[i * dimension + j]; }
};

// ---------------------------------------------------------------------------
// Standard families. Vertex i is labelled "i" except for hypercubes, whose
// vertices carry their d-bit binary string (most significant bit first).

Graph MakeCycle(int n);
Graph MakePath(int n);
Graph MakeComplete(int n);
Graph MakeEmpty(int n);
Graph MakeHypercube(int d);
// C_n^d: i ~ j iff the cyclic distance is at most d. Requires 1 <= d < ceil(n/2).
Graph MakeCyclePower(int n, int d);
Graph MakeCompleteBipartite(int a, int b);
Graph MakeStar(int leaves);
Graph MakePetersen();

// ---------------------------------------------------------------------------
// Structure.

// BFS 2-colouring. Components are rooted in vertex order and each root goes to
// the first part; the parts are swapped at the end if needed so that
// |first| <= |second|. Empty if the graph has an odd cycle.
std::optional<std::pair<std::vector<int>, std::vector<int>>> Bipartition(
    const Graph& g);

// Hop distances from `source`; unreachable vertices get -1.
std::vector<int> BfsDistances(const Graph& g, int source);

// Eccentricity of every vertex. Throws infinite-distance if disconnected.
std::vector<int> Eccentricities(const Graph& g);
int Diameter(const Graph& g);
int Radius(const Graph& g);
bool IsConnected(const Graph& g);

// Adjacency-flavour quotient if the partition is equitable, empty otherwise.
std::optional<QuotientMatrix> EquitableCheck(const Graph& g,
                                             const VertexPartition& partition);

// Sum of degrees; equals twice the edge count.
std::size_t DegreeSum(const Graph& g);

}  // namespace supertoken

#endif  // SUPERTOKEN_GRAPH_HPP_
