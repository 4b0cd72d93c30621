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

#include "supertoken/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "supertoken/error.hpp"

namespace supertoken {

namespace {

// Colouring of the disjoint union: vertices 0..n-1 are g, n..2n-1 are h.
class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.num_vertices()) {}

  std::optional<std::vector<int>> Run() {
    std::vector<int> colors(2 * n_);
    for (int v = 0; v < n_; ++v) {
      colors[v] = g_.degree(v);
      colors[n_ + v] = h_.degree(v);
    }
    return Search(std::move(colors));
  }

 private:
  std::span<const int> Neighbors(int x) const {
    return x < n_ ? g_.neighbors(x) : h_.neighbors(x - n_);
  }
  int Offset(int x) const { return x < n_ ? 0 : n_; }

  // Refines to the coarsest stable colouring; colours are renumbered densely
  // in signature order, so equal colours mean the same thing on both sides.
  void Refine(std::vector<int>& colors) const {
    int num_colors = -1;
    std::vector<int> signature;
    while (true) {
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> sigs(2 * n_);
      for (int x = 0; x < 2 * n_; ++x) {
        signature.clear();
        signature.push_back(colors[x]);
        const int off = Offset(x);
        for (int y : Neighbors(x)) signature.push_back(colors[y + off]);
        std::sort(signature.begin() + 1, signature.end());
        sigs[x] = signature;
        ids.emplace(signature, 0);
      }
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (int x = 0; x < 2 * n_; ++x) colors[x] = ids[sigs[x]];
      if (next == num_colors) return;
      num_colors = next;
    }
  }

  std::optional<std::vector<int>> Search(std::vector<int> colors) {
    Refine(colors);
    const int num_colors = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<int> left(num_colors, 0), right(num_colors, 0);
    for (int x = 0; x < n_; ++x) ++left[colors[x]];
    for (int x = n_; x < 2 * n_; ++x) ++right[colors[x]];
    if (left != right) return std::nullopt;

    // Smallest non-singleton cell, lowest colour on ties.
    int target = -1;
    for (int c = 0; c < num_colors; ++c)
      if (left[c] > 1 && (target < 0 || left[c] < left[target])) target = c;

    if (target < 0) {
      std::vector<int> by_color(num_colors);
      for (int x = n_; x < 2 * n_; ++x) by_color[colors[x]] = x - n_;
      std::vector<int> phi(n_);
      for (int v = 0; v < n_; ++v) phi[v] = by_color[colors[v]];
      if (Verify(phi)) return phi;
      return std::nullopt;
    }

    int pivot = 0;
    while (colors[pivot] != target) ++pivot;
    for (int w = n_; w < 2 * n_; ++w) {
      if (colors[w] != target) continue;
      auto next = colors;
      next[pivot] = num_colors;
      next[w] = num_colors;
      if (auto phi = Search(std::move(next))) return phi;
    }
    return std::nullopt;
  }

  bool Verify(const std::vector<int>& phi) const {
    for (int u = 0; u < n_; ++u) {
      if (g_.degree(u) != h_.degree(phi[u])) return false;
      for (int v : g_.neighbors(u))
        if (!h_.adjacent(phi[u], phi[v])) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
};

}  // namespace

std::optional<std::vector<int>> FindIsomorphism(const Graph& g, const Graph& h,
                                                bool force) {
  const int n = std::max(g.num_vertices(), h.num_vertices());
  Guard(n <= kIsomorphismGuard, force,
        "isomorphism test on " + std::to_string(n) + " vertices (limit " +
            std::to_string(kIsomorphismGuard) + ")");
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges())
    return std::nullopt;
  if (g.num_vertices() == 0) return std::vector<int>{};
  return Matcher(g, h).Run();
}

bool IsIsomorphic(const Graph& g, const Graph& h, bool force) {
  return FindIsomorphism(g, h, force).has_value();
}

}  // namespace supertoken
