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

// Slow, obviously-correct reference implementations used only by tests.
// None of them share code with the library solvers.

#ifndef SUPERTOKEN_TESTS_ORACLES_HPP_
#define SUPERTOKEN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "supertoken/graph.hpp"

namespace supertoken::oracle {

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix Matrix(const Graph& g) {
  AdjMatrix a(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// alpha by plain branching: a vertex of degree <= 1 can always be taken;
// otherwise a vertex of maximum degree is either in the set or not.
inline int Alpha(const AdjMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::function<int(std::vector<bool>&)> rec = [&](std::vector<bool>& alive) -> int {
    int best_v = -1, best_d = -1, low_v = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int d = 0;
      for (int u = 0; u < n; ++u) d += alive[u] && a[v][u];
      if (d <= 1 && low_v < 0) low_v = v;
      if (d > best_d) best_d = d, best_v = v;
    }
    if (best_v < 0) return 0;
    auto take = [&](int v) {
      std::vector<int> removed = {v};
      alive[v] = false;
      for (int u = 0; u < n; ++u)
        if (alive[u] && a[v][u]) {
          alive[u] = false;
          removed.push_back(u);
        }
      const int r = 1 + rec(alive);
      for (int u : removed) alive[u] = true;
      return r;
    };
    if (low_v >= 0) return take(low_v);
    const int with = take(best_v);
    alive[best_v] = false;
    const int without = rec(alive);
    alive[best_v] = true;
    return std::max(with, without);
  };
  std::vector<bool> alive(n, true);
  return rec(alive);
}

inline int Alpha(const Graph& g) { return Alpha(Matrix(g)); }

inline int Omega(const Graph& g) {
  AdjMatrix a = Matrix(g);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = i != j && !a[i][j];
  return Alpha(a);
}

// Smallest c admitting a proper colouring, by plain backtracking.
inline int Chi(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  const AdjMatrix a = Matrix(g);
  for (int c = 1;; ++c) {
    std::vector<int> col(n, -1);
    std::function<bool(int)> place = [&](int v) {
      if (v == n) return true;
      for (int x = 0; x < c; ++x) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = !(a[u][v] && col[u] == x);
        if (!ok) continue;
        col[v] = x;
        if (place(v + 1)) return true;
      }
      col[v] = -1;
      return false;
    };
    if (place(0)) return c;
  }
}

// All count vectors of length n summing to k, in no particular order.
inline std::vector<std::vector<int>> CountVectors(int n, int k, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      if (left <= cap) {
        cur[i] = left;
        out.push_back(cur);
      }
      return;
    }
    for (int c = 0; c <= std::min(left, cap); ++c) {
      cur[i] = c;
      rec(i + 1, left - c);
    }
  };
  if (n > 0) rec(0, k);
  return out;
}

inline std::string CountLabel(const std::vector<int>& counts) {
  std::string s;
  for (std::size_t v = 0; v < counts.size(); ++v)
    for (int t = 0; t < counts[v]; ++t) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

// Edge set of the token-move graph keyed by multiset labels. `cap` = k gives
// the supertoken graph, `cap` = 1 the token graph.
inline std::set<std::pair<std::string, std::string>> TokenMoveEdges(const Graph& g, int k,
                                                                    int cap) {
  const auto configs = CountVectors(g.num_vertices(), k, cap);
  const AdjMatrix a = Matrix(g);
  std::set<std::pair<std::string, std::string>> edges;
  for (std::size_t x = 0; x < configs.size(); ++x) {
    for (std::size_t y = x + 1; y < configs.size(); ++y) {
      int from = -1, to = -1, diff = 0;
      for (int v = 0; v < g.num_vertices(); ++v) {
        const int d = configs[y][v] - configs[x][v];
        if (d == 0) continue;
        diff += std::abs(d);
        if (d == -1) from = v;
        if (d == 1) to = v;
      }
      if (diff == 2 && from >= 0 && to >= 0 && a[from][to]) {
        auto l1 = CountLabel(configs[x]), l2 = CountLabel(configs[y]);
        if (l2 < l1) std::swap(l1, l2);
        edges.insert({l1, l2});
      }
    }
  }
  return edges;
}

inline std::set<std::pair<std::string, std::string>> LabelledEdges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges()) {
    auto l1 = g.label(u), l2 = g.label(v);
    if (l2 < l1) std::swap(l1, l2);
    edges.insert({l1, l2});
  }
  return edges;
}

// Bipartite bound by counting: k-multisets over c1 + c2 symbols with an even
// number of tokens on the first c1 symbols.
inline std::int64_t EvenSideMultisets(int c1, int c2, int k) {
  std::int64_t total = 0;
  for (const auto& counts : CountVectors(c1 + c2, k, k)) {
    int on_first = 0;
    for (int v = 0; v < c1; ++v) on_first += counts[v];
    if (on_first % 2 == 0) ++total;
  }
  return total;
}

// G(n, q) with a fixed engine; q in percent.
inline Graph RandomGraph(std::mt19937& rng, int n, int q) {
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> pct(0, 99);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (pct(rng) < q) edges.push_back({u, v});
  return Graph::FromEdges(n, edges);
}

inline std::int64_t Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace supertoken::oracle

#endif  // SUPERTOKEN_TESTS_ORACLES_HPP_
