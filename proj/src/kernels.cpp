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

#include "supertoken/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supertoken::kernels {

namespace {

// Neighbour list of one configuration. `buf` holds its sorted multiset and
// `moved` is scratch space of the same size.
void TokenMoves(const Graph& base, const ConfigSpace& space,
                std::span<const int> buf, std::vector<int>& moved,
                std::vector<int>& out) {
  const bool subsets = space.kind() == ConfigSpace::Kind::kSubsets;
  const int k = space.k();
  out.clear();
  for (int t = 0; t < k; ++t) {
    const int a = buf[t];
    if (t > 0 && buf[t - 1] == a) continue;  // same move as the previous token
    for (int b : base.neighbors(a)) {
      if (subsets && std::binary_search(buf.begin(), buf.end(), b)) continue;
      // Remove one copy of a, insert b, keep sorted.
      moved.clear();
      bool removed = false;
      bool inserted = false;
      for (int x : buf) {
        if (!removed && x == a) {
          removed = true;
          continue;
        }
        if (!inserted && b <= x) {
          moved.push_back(b);
          inserted = true;
        }
        moved.push_back(x);
      }
      if (!inserted) moved.push_back(b);
      out.push_back(static_cast<int>(space.Rank(moved)));
    }
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<std::vector<int>> TokenMoveAdjacencySerial(const Graph& base,
                                                       const ConfigSpace& space) {
  const auto count = static_cast<std::int64_t>(space.size());
  std::vector<std::vector<int>> adjacency(count);
  std::vector<int> buf(space.k());
  std::vector<int> moved;
  moved.reserve(space.k());
  for (std::int64_t r = 0; r < count; ++r) {
    space.Unrank(static_cast<std::uint64_t>(r), buf);
    TokenMoves(base, space, buf, moved, adjacency[r]);
  }
  return adjacency;
}

std::vector<std::vector<int>> TokenMoveAdjacencyParallel(
    const Graph& base, const ConfigSpace& space) {
  const auto count = static_cast<std::int64_t>(space.size());
  std::vector<std::vector<int>> adjacency(count);
#pragma omp parallel
  {
    std::vector<int> buf(space.k());
    std::vector<int> moved;
    moved.reserve(space.k());
#pragma omp for schedule(static, 256)
    for (std::int64_t r = 0; r < count; ++r) {
      space.Unrank(static_cast<std::uint64_t>(r), buf);
      TokenMoves(base, space, buf, moved, adjacency[r]);
    }
  }
  return adjacency;
}

namespace {

// Returns the eccentricity of `source`, or -1 if some vertex is unreachable.
int Eccentricity(const Graph& g, int source, std::vector<int>& dist,
                 std::vector<int>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
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
  if (static_cast<int>(queue.size()) != g.num_vertices()) return -1;
  return dist[queue.back()];
}

}  // namespace

std::vector<int> EccentricitiesSerial(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> ecc(n);
  std::vector<int> dist(n);
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    ecc[s] = Eccentricity(g, s, dist, queue);
    if (ecc[s] < 0) return std::vector<int>(n, -1);
  }
  return ecc;
}

std::vector<int> EccentricitiesParallel(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> ecc(n);
#pragma omp parallel
  {
    std::vector<int> dist(n);
    std::vector<int> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
    for (int s = 0; s < n; ++s) ecc[s] = Eccentricity(g, s, dist, queue);
  }
  if (std::find(ecc.begin(), ecc.end(), -1) != ecc.end())
    return std::vector<int>(n, -1);
  return ecc;
}

int MaxThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace supertoken::kernels
