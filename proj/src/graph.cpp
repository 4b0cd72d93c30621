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

#include "supertoken/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "supertoken/error.hpp"
#include "supertoken/kernels.hpp"

namespace supertoken {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter:
      return "invalid-parameter";
    case ErrorKind::kTooLarge:
      return "too-large";
    case ErrorKind::kInfiniteDistance:
      return "infinite-distance";
    case ErrorKind::kPropertyViolation:
      return "property-violation";
    case ErrorKind::kFormulaInconsistency:
      return "formula-inconsistency";
  }
  return "unknown";
}

namespace {

std::vector<std::string> DefaultLabels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

Graph::Graph(std::vector<std::vector<int>> adjacency,
             std::vector<std::string> labels, std::string name)
    : adjacency_(std::move(adjacency)),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  const int n = num_vertices();
  if (labels_.empty()) labels_ = DefaultLabels(n);
  Require(static_cast<int>(labels_.size()) == n,
          "label count does not match vertex count");
  std::size_t degree_sum = 0;
  for (const auto& list : adjacency_) degree_sum += list.size();
  num_edges_ = degree_sum / 2;
  if (n <= kBitMatrixLimit) {
    bits_.assign(n, DynamicBitset(n));
    for (int v = 0; v < n; ++v)
      for (int u : adjacency_[v]) bits_[v].set(u);
  }
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges,
                       std::vector<std::string> labels, std::string name) {
  Require(n >= 0, "vertex count must be non-negative");
  std::vector<std::vector<int>> adjacency(n);
  for (auto [u, v] : edges) {
    Require(u >= 0 && u < n && v >= 0 && v < n,
            "edge endpoint out of range: " + std::to_string(u) + "-" +
                std::to_string(v));
    Require(u != v, "self-loop at vertex " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    Require(std::adjacent_find(list.begin(), list.end()) == list.end(),
            "repeated edge at vertex " + std::to_string(v));
  }
  return Graph(std::move(adjacency), std::move(labels), std::move(name));
}

Graph Graph::FromAdjacency(std::vector<std::vector<int>> adjacency,
                           std::vector<std::string> labels, std::string name) {
  const int n = static_cast<int>(adjacency.size());
  for (int v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    Require(std::adjacent_find(list.begin(), list.end()) == list.end(),
            "repeated edge at vertex " + std::to_string(v));
    for (int u : list) {
      Require(u >= 0 && u < n, "neighbour out of range");
      Require(u != v, "self-loop at vertex " + std::to_string(v));
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int u : adjacency[v]) {
      Require(std::binary_search(adjacency[u].begin(), adjacency[u].end(), v),
              "adjacency is not symmetric");
    }
  }
  return Graph(std::move(adjacency), std::move(labels), std::move(name));
}

bool Graph::adjacent(int u, int v) const {
  if (!bits_.empty()) return bits_[u].test(v);
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::WithName(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Graph Graph::WithLabels(std::vector<std::string> labels) const {
  Require(static_cast<int>(labels.size()) == num_vertices(),
          "label count does not match vertex count");
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

Graph Graph::Permuted(std::span<const int> perm) const {
  const int n = num_vertices();
  Require(static_cast<int>(perm.size()) == n, "permutation has wrong size");
  std::vector<char> seen(n, 0);
  for (int x : perm) {
    Require(x >= 0 && x < n && !seen[x], "not a permutation");
    seen[x] = 1;
  }
  std::vector<std::vector<int>> adjacency(n);
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) {
    labels[perm[v]] = labels_[v];
    for (int u : adjacency_[v]) adjacency[perm[v]].push_back(perm[u]);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  return Graph(std::move(adjacency), std::move(labels), name_);
}

Graph Graph::Complement() const {
  const int n = num_vertices();
  std::vector<std::vector<int>> adjacency(n);
  for (int v = 0; v < n; ++v) {
    auto it = adjacency_[v].begin();
    for (int u = 0; u < n; ++u) {
      if (it != adjacency_[v].end() && *it == u) {
        ++it;
        continue;
      }
      if (u != v) adjacency[v].push_back(u);
    }
  }
  return Graph(std::move(adjacency), labels_, name_ + "-complement");
}

Graph Graph::InducedSubgraph(std::span<const int> vertices) const {
  const int n = num_vertices();
  std::vector<int> index(n, -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    const int v = vertices[i];
    Require(v >= 0 && v < n && index[v] < 0, "invalid induced vertex list");
    index[v] = i;
  }
  std::vector<std::vector<int>> adjacency(vertices.size());
  std::vector<std::string> labels(vertices.size());
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    labels[i] = labels_[vertices[i]];
    for (int u : adjacency_[vertices[i]])
      if (index[u] >= 0) adjacency[i].push_back(index[u]);
    std::sort(adjacency[i].begin(), adjacency[i].end());
  }
  return Graph(std::move(adjacency), std::move(labels), name_);
}

VertexPartition VertexPartition::FromClasses(
    int n, std::vector<std::vector<int>> classes) {
  VertexPartition p;
  p.class_of_.assign(n, -1);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    Require(!classes[c].empty(), "partition class is empty");
    for (int v : classes[c]) {
      Require(v >= 0 && v < n, "partition vertex out of range");
      Require(p.class_of_[v] < 0,
              "vertex " + std::to_string(v) + " appears in two classes");
      p.class_of_[v] = c;
    }
  }
  for (int v = 0; v < n; ++v)
    Require(p.class_of_[v] >= 0,
            "vertex " + std::to_string(v) + " is in no class");
  p.classes_ = std::move(classes);
  return p;
}

VertexPartition VertexPartition::Discrete(int n) {
  std::vector<std::vector<int>> classes(n);
  for (int v = 0; v < n; ++v) classes[v] = {v};
  return FromClasses(n, std::move(classes));
}

std::vector<int> VertexPartition::sizes() const {
  std::vector<int> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(static_cast<int>(c.size()));
  return out;
}

// ---------------------------------------------------------------------------

Graph MakeCycle(int n) {
  Require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(n, edges, {}, "C" + std::to_string(n));
}

Graph MakePath(int n) {
  Require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(n, edges, {}, "P" + std::to_string(n));
}

Graph MakeComplete(int n) {
  Require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::FromEdges(n, edges, {}, "K" + std::to_string(n));
}

Graph MakeEmpty(int n) {
  Require(n >= 0, "vertex count must be non-negative");
  return Graph::FromEdges(n, {}, {}, "E" + std::to_string(n));
}

Graph MakeHypercube(int d) {
  Require(d >= 1 && d <= 16, "hypercube needs 1 <= d <= 16");
  const int n = 1 << d;
  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) {
    std::string bits(d, '0');
    for (int b = 0; b < d; ++b)
      if (v >> b & 1) bits[d - 1 - b] = '1';
    labels[v] = bits;
    for (int b = 0; b < d; ++b) {
      const int u = v ^ (1 << b);
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return Graph::FromEdges(n, edges, std::move(labels), "Q" + std::to_string(d));
}

Graph MakeCyclePower(int n, int d) {
  Require(n >= 3, "cycle power needs n >= 3");
  Require(d >= 1 && d < (n + 1) / 2, "cycle power needs 1 <= d < ceil(n/2)");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int s = 1; s <= d; ++s) edges.emplace_back(i, (i + s) % n);
  return Graph::FromEdges(n, edges, {},
                          "C" + std::to_string(n) + "^" + std::to_string(d));
}

Graph MakeCompleteBipartite(int a, int b) {
  Require(a >= 1 && b >= 1, "complete bipartite needs both sides non-empty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::FromEdges(a + b, edges, {},
                          "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph MakeStar(int leaves) {
  Require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::FromEdges(leaves + 1, edges, {},
                          "K1," + std::to_string(leaves));
}

Graph MakePetersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::FromEdges(10, edges, {}, "Petersen");
}

// ---------------------------------------------------------------------------

std::optional<std::pair<std::vector<int>, std::vector<int>>> Bipartition(
    const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < n; ++v)
    (side[v] == 0 ? parts.first : parts.second).push_back(v);
  if (parts.first.size() > parts.second.size()) std::swap(parts.first, parts.second);
  return parts;
}

std::vector<int> BfsDistances(const Graph& g, int source) {
  const int n = g.num_vertices();
  Require(source >= 0 && source < n, "BFS source out of range");
  std::vector<int> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

bool IsConnected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = BfsDistances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> Eccentricities(const Graph& g) {
  Require(g.num_vertices() > 0, "eccentricity of the empty graph");
  if (!IsConnected(g)) {
    Fail(ErrorKind::kInfiniteDistance,
         "graph '" + g.name() + "' is disconnected");
  }
  return kernels::EccentricitiesParallel(g);
}

int Diameter(const Graph& g) {
  const auto ecc = Eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

int Radius(const Graph& g) {
  const auto ecc = Eccentricities(g);
  return *std::min_element(ecc.begin(), ecc.end());
}

std::optional<QuotientMatrix> EquitableCheck(const Graph& g,
                                             const VertexPartition& partition) {
  const int n = g.num_vertices();
  int covered = 0;
  for (const auto& c : partition.classes()) covered += static_cast<int>(c.size());
  Require(covered == n, "partition does not cover the graph");

  const int sigma = partition.num_classes();
  QuotientMatrix q;
  q.dimension = sigma;
  q.entries.assign(static_cast<std::size_t>(sigma) * sigma, 0.0);
  q.class_sizes = partition.sizes();
  q.flavor = QuotientFlavor::kAdjacency;

  std::vector<int> counts(sigma);
  for (int i = 0; i < sigma; ++i) {
    bool first = true;
    std::vector<int> reference;
    for (int v : partition.cls(i)) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int u : g.neighbors(v)) ++counts[partition.class_of(u)];
      if (first) {
        reference = counts;
        first = false;
      } else if (counts != reference) {
        return std::nullopt;
      }
    }
    for (int j = 0; j < sigma; ++j) q.at(i, j) = reference[j];
  }
  return q;
}

std::size_t DegreeSum(const Graph& g) {
  std::size_t sum = 0;
  for (int v = 0; v < g.num_vertices(); ++v) sum += g.degree(v);
  return sum;
}

}  // namespace supertoken
