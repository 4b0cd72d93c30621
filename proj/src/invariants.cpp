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

#include "supertoken/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "supertoken/bitset.hpp"
#include "supertoken/error.hpp"

namespace supertoken {

const char* CertificateKindName(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kIndependentSet:
      return "independent-set";
    case CertificateKind::kClique:
      return "clique";
    case CertificateKind::kColoring:
      return "coloring";
    case CertificateKind::kMatching:
      return "matching";
    case CertificateKind::kResolvingSet:
      return "resolving-set";
  }
  return "unknown";
}

const char* TriangleTypeName(TriangleType type) {
  switch (type) {
    case TriangleType::kType1:
      return "Type1";
    case TriangleType::kType2:
      return "Type2";
    case TriangleType::kNotATriangle:
      return "NotATriangle";
  }
  return "unknown";
}

namespace {

bool DistinctInRange(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> seen(g.num_vertices(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.num_vertices() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<std::vector<int>> DistanceMatrix(const Graph& g) {
  std::vector<std::vector<int>> dist(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    dist[v] = BfsDistances(g, v);
    for (int d : dist[v]) {
      if (d < 0) {
        Fail(ErrorKind::kInfiniteDistance,
             "graph '" + g.name() + "' is disconnected");
      }
    }
  }
  return dist;
}

bool Resolves(const std::vector<std::vector<int>>& dist,
              const std::vector<int>& set) {
  const int n = static_cast<int>(dist.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool separated = false;
      for (int w : set) {
        if (dist[w][u] != dist[w][v]) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

}  // namespace

bool VerifyCertificate(const Graph& g, const Certificate& cert) {
  switch (cert.kind) {
    case CertificateKind::kIndependentSet:
    case CertificateKind::kClique: {
      if (static_cast<int>(cert.vertices.size()) != cert.value) return false;
      if (!DistinctInRange(g, cert.vertices)) return false;
      const bool want_edges = cert.kind == CertificateKind::kClique;
      for (std::size_t i = 0; i < cert.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < cert.vertices.size(); ++j)
          if (g.adjacent(cert.vertices[i], cert.vertices[j]) != want_edges)
            return false;
      return true;
    }
    case CertificateKind::kColoring: {
      if (static_cast<int>(cert.colors.size()) != g.num_vertices()) return false;
      for (int c : cert.colors)
        if (c < 0 || c >= cert.value) return false;
      for (auto [u, v] : g.edges())
        if (cert.colors[u] == cert.colors[v]) return false;
      return true;
    }
    case CertificateKind::kMatching: {
      if (static_cast<int>(cert.matching.size()) != cert.value) return false;
      std::vector<int> ends;
      for (auto [u, v] : cert.matching) {
        if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices())
          return false;
        if (!g.adjacent(u, v)) return false;
        ends.push_back(u);
        ends.push_back(v);
      }
      return DistinctInRange(g, ends);
    }
    case CertificateKind::kResolvingSet: {
      if (static_cast<int>(cert.vertices.size()) != cert.value) return false;
      if (!DistinctInRange(g, cert.vertices)) return false;
      return Resolves(DistanceMatrix(g), cert.vertices);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Maximum clique.

namespace {

class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(const Graph& g) : n_(g.num_vertices()) {
    // Non-increasing degree, lowest index first on ties.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(a) > g.degree(b);
    });
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) position[order_[i]] = i;
    adjacency_.assign(n_, DynamicBitset(n_));
    for (int v = 0; v < n_; ++v)
      for (int u : g.neighbors(v)) adjacency_[position[v]].set(position[u]);
  }

  std::vector<int> Solve() {
    DynamicBitset all(n_);
    all.set_all();
    if (n_ > 0) Expand(all);
    std::vector<int> out;
    for (int v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Greedy sequential colouring of `p`; vertices come out in non-decreasing
  // colour order with their colour as an upper bound on the clique size.
  void ColorSort(const DynamicBitset& p, std::vector<int>& verts,
                 std::vector<int>& bounds) const {
    DynamicBitset uncolored = p;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      DynamicBitset candidates = uncolored;
      for (std::size_t v = candidates.first(); v < candidates.size();
           v = candidates.next(v + 1)) {
        candidates.subtract(adjacency_[v]);
        uncolored.reset(v);
        verts.push_back(static_cast<int>(v));
        bounds.push_back(color);
      }
    }
  }

  void Expand(DynamicBitset p) {
    std::vector<int> verts;
    std::vector<int> bounds;
    ColorSort(p, verts, bounds);
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (current_.size() + bounds[i] <= best_.size()) return;
      const int v = verts[i];
      current_.push_back(v);
      DynamicBitset next = p & adjacency_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        Expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  int n_;
  std::vector<int> order_;
  std::vector<DynamicBitset> adjacency_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

Certificate CliqueNumber(const Graph& g, bool force) {
  Guard(g.num_vertices() <= kCliqueGuard, force,
        "clique number on " + std::to_string(g.num_vertices()) +
            " vertices (limit " + std::to_string(kCliqueGuard) + ")");
  Certificate cert;
  cert.kind = CertificateKind::kClique;
  cert.vertices = MaxCliqueSolver(g).Solve();
  cert.value = static_cast<int>(cert.vertices.size());
  return cert;
}

Certificate IndependenceNumberBranchAndBound(const Graph& g, bool force) {
  Guard(g.num_vertices() <= kIndependenceGuard, force,
        "independence number on " + std::to_string(g.num_vertices()) +
            " vertices (limit " + std::to_string(kIndependenceGuard) + ")");
  Certificate cert;
  cert.kind = CertificateKind::kIndependentSet;
  cert.vertices = MaxCliqueSolver(g.Complement()).Solve();
  cert.value = static_cast<int>(cert.vertices.size());
  return cert;
}

Certificate IndependenceNumberKoenig(const Graph& g) {
  const auto parts = Bipartition(g);
  Require(parts.has_value(), "Koenig route needs a bipartite graph");
  const auto& [left, right] = *parts;
  const Certificate matching = MaxBipartiteMatching(g, left, right);

  const int n = g.num_vertices();
  std::vector<int> mate(n, -1);
  for (auto [u, v] : matching.matching) {
    mate[u] = v;
    mate[v] = u;
  }
  std::vector<char> is_left(n, 0);
  for (int v : left) is_left[v] = 1;

  // Alternating reachability from unmatched left vertices.
  std::vector<char> reached(n, 0);
  std::vector<int> stack;
  for (int v : left) {
    if (mate[v] < 0) {
      reached[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (reached[u]) continue;
      reached[u] = 1;  // right vertex, reached by a non-matching edge
      if (mate[u] >= 0 && !reached[mate[u]]) {
        reached[mate[u]] = 1;
        stack.push_back(mate[u]);
      }
    }
  }
  // Minimum vertex cover is (left \ Z) u (right n Z); the rest is independent.
  Certificate cert;
  cert.kind = CertificateKind::kIndependentSet;
  for (int v = 0; v < n; ++v) {
    const bool in_cover = is_left[v] ? !reached[v] : reached[v];
    if (!in_cover) cert.vertices.push_back(v);
  }
  cert.value = static_cast<int>(cert.vertices.size());
  if (cert.value != n - matching.value) {
    Fail(ErrorKind::kPropertyViolation, "Koenig cover size mismatch");
  }
  return cert;
}

Certificate IndependenceNumber(const Graph& g, bool force) {
  Guard(g.num_vertices() <= kIndependenceGuard, force,
        "independence number on " + std::to_string(g.num_vertices()) +
            " vertices (limit " + std::to_string(kIndependenceGuard) + ")");
  if (Bipartition(g).has_value()) return IndependenceNumberKoenig(g);
  return IndependenceNumberBranchAndBound(g, true);
}

// ---------------------------------------------------------------------------
// Chromatic number.

namespace {

class DsaturColoring {
 public:
  DsaturColoring(const Graph& g, int max_colors)
      : g_(g),
        n_(g.num_vertices()),
        k_(max_colors),
        colors_(n_, -1),
        counts_(static_cast<std::size_t>(n_) * max_colors, 0),
        saturation_(n_, 0) {}

  // Greedy pass: never backtracks, may open new colours freely.
  static std::vector<int> Greedy(const Graph& g) {
    const int n = g.num_vertices();
    DsaturColoring state(g, std::max(n, 1));
    for (int step = 0; step < n; ++step) {
      const int v = state.Select();
      std::vector<char> used(n + 1, 0);
      for (int u : g.neighbors(v))
        if (state.colors_[u] >= 0) used[state.colors_[u]] = 1;
      int c = 0;
      while (used[c]) ++c;
      state.Assign(v, c);
    }
    return state.colors_;
  }

  // Exact k-colourability; fills colors() on success.
  bool Solve() { return Extend(0, 0); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  int& count(int v, int c) { return counts_[static_cast<std::size_t>(v) * k_ + c]; }

  // Uncoloured vertex of maximum saturation, then degree, then lowest index.
  int Select() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (colors_[v] >= 0) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  void Assign(int v, int c) {
    colors_[v] = c;
    for (int u : g_.neighbors(v))
      if (count(u, c)++ == 0) ++saturation_[u];
  }

  void Unassign(int v) {
    const int c = colors_[v];
    colors_[v] = -1;
    for (int u : g_.neighbors(v))
      if (--count(u, c) == 0) --saturation_[u];
  }

  bool Extend(int colored, int used) {
    if (colored == n_) return true;
    const int v = Select();
    if (saturation_[v] >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (count(v, c) > 0) continue;
      Assign(v, c);
      if (Extend(colored + 1, std::max(used, c + 1))) return true;
      Unassign(v);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::vector<int> colors_;
  std::vector<int> counts_;
  std::vector<int> saturation_;
};

}  // namespace

Certificate ChromaticNumber(const Graph& g, bool force) {
  const int n = g.num_vertices();
  Guard(n <= kChromaticGuard, force,
        "chromatic number on " + std::to_string(n) + " vertices (limit " +
            std::to_string(kChromaticGuard) + ")");
  Certificate cert;
  cert.kind = CertificateKind::kColoring;
  if (n == 0) return cert;

  std::vector<int> best = DsaturColoring::Greedy(g);
  int upper = *std::max_element(best.begin(), best.end()) + 1;
  int lower = CliqueNumber(g, true).value;
  if (!Bipartition(g).has_value()) lower = std::max(lower, 3);

  for (int k = lower; k < upper; ++k) {
    DsaturColoring exact(g, k);
    if (exact.Solve()) {
      best = exact.colors();
      upper = k;
      break;
    }
  }
  cert.value = upper;
  cert.colors = std::move(best);
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

void RequireBipartition(const Graph& g, const std::vector<int>& c1,
                        const std::vector<int>& c2) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  for (int v : c1) {
    Require(v >= 0 && v < n && side[v] < 0, "invalid bipartition side C1");
    side[v] = 0;
  }
  for (int v : c2) {
    Require(v >= 0 && v < n && side[v] < 0, "invalid bipartition side C2");
    side[v] = 1;
  }
  for (int v = 0; v < n; ++v) Require(side[v] >= 0, "bipartition does not cover V");
  for (auto [u, v] : g.edges())
    Require(side[u] != side[v], "edge inside one side of the bipartition");
}

bool Augment(const Graph& g, int v, std::vector<int>& mate,
             std::vector<int>& visited, int stamp) {
  for (int u : g.neighbors(v)) {
    if (visited[u] == stamp) continue;
    visited[u] = stamp;
    if (mate[u] < 0 || Augment(g, mate[u], mate, visited, stamp)) {
      mate[u] = v;
      mate[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

Certificate MaxBipartiteMatching(const Graph& g, const std::vector<int>& c1,
                                 const std::vector<int>& c2) {
  RequireBipartition(g, c1, c2);
  const int n = g.num_vertices();
  std::vector<int> mate(n, -1);
  std::vector<int> visited(n, -1);
  std::vector<int> left = c1;
  std::sort(left.begin(), left.end());
  int stamp = 0;
  for (int v : left) Augment(g, v, mate, visited, stamp++);

  Certificate cert;
  cert.kind = CertificateKind::kMatching;
  for (int v : left)
    if (mate[v] >= 0) cert.matching.emplace_back(v, mate[v]);
  cert.value = static_cast<int>(cert.matching.size());
  return cert;
}

bool HallDegreeCondition(const Graph& g, const std::vector<int>& c1,
                         const std::vector<int>& c2, int delta) {
  RequireBipartition(g, c1, c2);
  for (int v : c1)
    if (g.degree(v) < delta) return false;
  for (int v : c2)
    if (g.degree(v) > delta) return false;
  return true;
}

bool CheckHallConsequence(const Graph& g, const std::vector<int>& c1,
                          const std::vector<int>& c2, int delta, bool force) {
  if (c1.size() > c2.size() || !HallDegreeCondition(g, c1, c2, delta)) return false;
  const Certificate alpha = IndependenceNumberBranchAndBound(g, force);
  if (alpha.value != static_cast<int>(c2.size())) {
    Fail(ErrorKind::kPropertyViolation,
         "degree condition holds but alpha = " + std::to_string(alpha.value) +
             " != |C2| = " + std::to_string(c2.size()));
  }
  return true;
}

Certificate MetricDimension(const Graph& g, bool force) {
  const int n = g.num_vertices();
  Guard(n <= kMetricDimensionGuard, force,
        "metric dimension on " + std::to_string(n) + " vertices (limit " +
            std::to_string(kMetricDimensionGuard) + ")");
  Require(n >= 1, "metric dimension of the empty graph");
  const auto dist = DistanceMatrix(g);
  Certificate cert;
  cert.kind = CertificateKind::kResolvingSet;
  for (int size = 0; size <= n; ++size) {
    // Lexicographic enumeration of size-subsets.
    std::vector<int> set(size);
    std::iota(set.begin(), set.end(), 0);
    while (true) {
      if (Resolves(dist, set)) {
        cert.vertices = set;
        cert.value = size;
        return cert;
      }
      int i = size - 1;
      while (i >= 0 && set[i] == n - size + i) --i;
      if (i < 0) break;
      ++set[i];
      for (int j = i + 1; j < size; ++j) set[j] = set[j - 1] + 1;
    }
  }
  Fail(ErrorKind::kPropertyViolation, "no resolving set found");
}

// ---------------------------------------------------------------------------
// Clique types in supertoken graphs.

namespace {

std::vector<int> Intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

std::vector<int> Union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool Contains(const std::vector<int>& outer, const std::vector<int>& inner) {
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

enum class CliqueFamily { kType1, kType2, kNeither };

// Family of a clique {A_1..A_q}, q >= 3, given as count vectors.
CliqueFamily ClassifyClique(const std::vector<std::vector<int>>& members) {
  const auto common = Intersect(members[0], members[1]);
  const auto joined = Union(members[0], members[1]);
  const bool type1 = std::all_of(members.begin(), members.end(),
                                 [&](const auto& m) { return Contains(m, common); });
  if (type1) return CliqueFamily::kType1;
  const bool type2 = std::all_of(members.begin(), members.end(),
                                 [&](const auto& m) { return Contains(joined, m); });
  return type2 ? CliqueFamily::kType2 : CliqueFamily::kNeither;
}

// Union minus intersection over all members, as a vertex list.
std::vector<int> Projection(const std::vector<std::vector<int>>& members) {
  std::vector<int> lo = members[0];
  std::vector<int> hi = members[0];
  for (const auto& m : members) {
    lo = Intersect(lo, m);
    hi = Union(hi, m);
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < lo.size(); ++v)
    for (int t = lo[v]; t < hi[v]; ++t) out.push_back(static_cast<int>(v));
  return out;
}

bool IsCliqueOf(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
        return false;
  return true;
}

void BronKerbosch(const std::vector<DynamicBitset>& adj, std::vector<int>& r,
                  DynamicBitset p, DynamicBitset x,
                  std::vector<std::vector<int>>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of P u X with most neighbours in P, lowest index on ties.
  std::size_t pivot = p.size();
  std::size_t pivot_count = 0;
  DynamicBitset px = p;
  px |= x;
  for (std::size_t u = px.first(); u < px.size(); u = px.next(u + 1)) {
    const std::size_t c = (p & adj[u]).count();
    if (pivot == p.size() || c > pivot_count) {
      pivot = u;
      pivot_count = c;
    }
  }
  DynamicBitset candidates = p;
  candidates.subtract(adj[pivot]);
  for (std::size_t v = candidates.first(); v < candidates.size();
       v = candidates.next(v + 1)) {
    r.push_back(static_cast<int>(v));
    BronKerbosch(adj, r, p & adj[v], x & adj[v], out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

bool ConfigsAdjacent(const Graph& g, const TokenConfig& a, const TokenConfig& b) {
  if (a.counts.size() != b.counts.size()) return false;
  int from = -1, to = -1;
  for (int v = 0; v < static_cast<int>(a.counts.size()); ++v) {
    const int d = a.counts[v] - b.counts[v];
    if (d == 0) continue;
    if (d == 1 && from < 0) {
      from = v;
    } else if (d == -1 && to < 0) {
      to = v;
    } else {
      return false;
    }
  }
  return from >= 0 && to >= 0 && g.adjacent(from, to);
}

TriangleClass ClassifyTriangle(const Graph& g, const TokenConfig& a,
                               const TokenConfig& b, const TokenConfig& c) {
  const int n = g.num_vertices();
  Require(static_cast<int>(a.counts.size()) == n &&
              static_cast<int>(b.counts.size()) == n &&
              static_cast<int>(c.counts.size()) == n,
          "configurations must live on the base graph");
  Require(a.num_tokens() == b.num_tokens() && b.num_tokens() == c.num_tokens(),
          "configurations must have the same number of tokens");
  Require(a != b && b != c && a != c, "configurations must be distinct");
  TriangleClass out;
  if (!ConfigsAdjacent(g, a, b) || !ConfigsAdjacent(g, b, c) ||
      !ConfigsAdjacent(g, a, c)) {
    return out;
  }
  const std::vector<std::vector<int>> members{a.counts, b.counts, c.counts};
  out.projected = Projection(members);
  const auto family = ClassifyClique(members);
  const bool type2 = family == CliqueFamily::kType2 ||
                     (family == CliqueFamily::kNeither &&
                      (Contains(Union(b.counts, c.counts), a.counts) ||
                       Contains(Union(a.counts, c.counts), b.counts)));
  if (family == CliqueFamily::kType1) {
    out.type = TriangleType::kType1;
  } else if (type2) {
    out.type = TriangleType::kType2;
  } else {
    Fail(ErrorKind::kPropertyViolation,
         "triangle " + a.Label() + " | " + b.Label() + " | " + c.Label() +
             " is of neither type");
  }
  if (out.projected.size() != 3 || !IsCliqueOf(g, out.projected)) {
    Fail(ErrorKind::kPropertyViolation,
         "triangle does not project to a 3-clique of the base graph");
  }
  return out;
}

CliqueCensus CliqueTypeCensus(const Graph& base, const Graph& supertoken,
                              bool force) {
  const int n = supertoken.num_vertices();
  Guard(n <= kCliqueGuard, force,
        "clique census on " + std::to_string(n) + " vertices (limit " +
            std::to_string(kCliqueGuard) + ")");
  std::vector<std::vector<int>> configs(n);
  for (int v = 0; v < n; ++v)
    configs[v] = TokenConfig::FromLabel(base.num_vertices(), supertoken.label(v)).counts;

  std::vector<DynamicBitset> adj(n, DynamicBitset(n));
  for (int v = 0; v < n; ++v)
    for (int u : supertoken.neighbors(v)) adj[v].set(u);

  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  DynamicBitset p(n);
  p.set_all();
  if (n > 0) BronKerbosch(adj, r, p, DynamicBitset(n), cliques);

  CliqueCensus census;
  census.maximal_cliques = static_cast<int>(cliques.size());
  for (const auto& c : cliques)
    census.clique_number = std::max(census.clique_number, static_cast<int>(c.size()));

  for (auto clique : cliques) {
    std::sort(clique.begin(), clique.end());
    const int q = static_cast<int>(clique.size());
    if (q == census.clique_number) ++census.maximum_cliques;
    if (q < 3) continue;
    std::vector<std::vector<int>> members;
    for (int v : clique) members.push_back(configs[v]);
    const auto family = ClassifyClique(members);
    if (family == CliqueFamily::kNeither) {
      std::string text;
      for (int v : clique) text += " " + supertoken.label(v);
      Fail(ErrorKind::kPropertyViolation, "clique of neither type:" + text);
    }
    const auto projected = Projection(members);
    if (static_cast<int>(projected.size()) != q || !IsCliqueOf(base, projected)) {
      Fail(ErrorKind::kPropertyViolation,
           "clique does not project to a clique of the same size");
    }
    const bool is_type1 = family == CliqueFamily::kType1;
    (is_type1 ? census.type1 : census.type2) += 1;
    if (q == census.clique_number)
      (is_type1 ? census.maximum_type1 : census.maximum_type2) += 1;
  }

  for (int u = 0; u < n; ++u) {
    for (int v : supertoken.neighbors(u)) {
      if (v <= u) continue;
      for (int w : supertoken.neighbors(v)) {
        if (w <= v || !supertoken.adjacent(u, w)) continue;
        const auto t = ClassifyTriangle(
            base, TokenConfig{configs[u]}, TokenConfig{configs[v]},
            TokenConfig{configs[w]});
        (t.type == TriangleType::kType1 ? census.triangles_type1
                                        : census.triangles_type2) += 1;
      }
    }
  }
  return census;
}

}  // namespace supertoken
