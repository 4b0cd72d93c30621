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

#include "supertoken/tokens.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

#include "supertoken/error.hpp"
#include "supertoken/kernels.hpp"

namespace supertoken {

int TokenConfig::num_tokens() const {
  int k = 0;
  for (int c : counts) k += c;
  return k;
}

std::vector<int> TokenConfig::Multiset() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(counts.size()); ++v)
    for (int t = 0; t < counts[v]; ++t) out.push_back(v);
  return out;
}

std::string TokenConfig::Label() const {
  std::string out;
  for (int v : Multiset()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

TokenConfig TokenConfig::FromMultiset(int n, std::span<const int> multiset) {
  TokenConfig c;
  c.counts.assign(n, 0);
  for (int v : multiset) {
    Require(v >= 0 && v < n, "token position out of range");
    ++c.counts[v];
  }
  return c;
}

TokenConfig TokenConfig::FromLabel(int n, const std::string& label) {
  std::vector<int> multiset;
  std::stringstream in(label);
  std::string item;
  while (std::getline(in, item, ',')) {
    Require(!item.empty(), "malformed configuration label '" + label + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    Require(used == item.size(), "malformed configuration label '" + label + "'");
    multiset.push_back(v);
  }
  return FromMultiset(n, multiset);
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      Fail(ErrorKind::kTooLarge, "binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t MultisetCount(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return Binomial(n + k - 1, k);
}

ConfigSpace::ConfigSpace(int n, int k, Kind kind)
    : n_(n), k_(k), kind_(kind), offset_(kind == Kind::kMultisets ? 1 : 0) {
  Require(n >= 1, "configuration space needs n >= 1");
  Require(k >= 0, "configuration space needs k >= 0");
  if (kind == Kind::kSubsets) Require(k <= n, "token graph needs k <= n");
  size_ = kind == Kind::kMultisets ? MultisetCount(n, k) : Binomial(n, k);
  const int rows = n + offset_ * k + 1;
  table_.assign(static_cast<std::size_t>(rows) * (k + 1), 0);
  for (int x = 0; x < rows; ++x)
    for (int j = 0; j <= k; ++j)
      table_[static_cast<std::size_t>(x) * (k + 1) + j] = Binomial(x, j);
}

std::uint64_t ConfigSpace::Rank(std::span<const int> sorted) const {
  Require(static_cast<int>(sorted.size()) == k_, "configuration has wrong size");
  std::uint64_t rank = 0;
  for (int i = 0; i < k_; ++i) {
    const int b = sorted[i] + offset_ * i;
    rank += choose(b, i + 1);
  }
  return rank;
}

void ConfigSpace::Unrank(std::uint64_t rank, std::span<int> out) const {
  int x = n_ + offset_ * (k_ - 1);  // exclusive upper bound for b_{k-1}
  for (int i = k_ - 1; i >= 0; --i) {
    --x;
    while (choose(x, i + 1) > rank) --x;
    rank -= choose(x, i + 1);
    out[i] = x - offset_ * i;
  }
}

std::uint64_t RankConfig(const TokenConfig& config) {
  const auto multiset = config.Multiset();
  ConfigSpace space(static_cast<int>(config.counts.size()),
                    static_cast<int>(multiset.size()),
                    ConfigSpace::Kind::kMultisets);
  return space.Rank(multiset);
}

TokenConfig UnrankConfig(std::uint64_t rank, int n, int k) {
  ConfigSpace space(n, k, ConfigSpace::Kind::kMultisets);
  Require(rank < space.size(), "rank " + std::to_string(rank) +
                                   " out of range for n=" + std::to_string(n) +
                                   ", k=" + std::to_string(k));
  std::vector<int> multiset(k);
  space.Unrank(rank, multiset);
  return TokenConfig::FromMultiset(n, multiset);
}

namespace {

Graph BuildTokenMoveGraph(const Graph& g, int k, ConfigSpace::Kind kind,
                          bool force, const std::string& name) {
  const int n = g.num_vertices();
  Require(k >= 1, "token count must be at least 1");
  const std::uint64_t count =
      kind == ConfigSpace::Kind::kMultisets ? MultisetCount(n, k) : Binomial(n, k);
  Guard(count <= kConstructionGuard, force,
        "construction would have " + std::to_string(count) +
            " vertices (limit " + std::to_string(kConstructionGuard) + ")");
  Guard(count <= static_cast<std::uint64_t>(std::numeric_limits<int>::max()),
        false, "construction exceeds addressable size");
  ConfigSpace space(n, k, kind);
  auto adjacency = kernels::TokenMoveAdjacencyParallel(g, space);
  std::vector<std::string> labels(count);
  std::vector<int> buf(k);
  for (std::uint64_t r = 0; r < count; ++r) {
    space.Unrank(r, buf);
    std::string label;
    for (int v : buf) {
      if (!label.empty()) label += ',';
      label += std::to_string(v);
    }
    labels[r] = std::move(label);
  }
  return Graph::FromAdjacency(std::move(adjacency), std::move(labels), name);
}

}  // namespace

Graph SupertokenGraph(const Graph& g, int k, bool force) {
  return BuildTokenMoveGraph(g, k, ConfigSpace::Kind::kMultisets, force,
                             "SF" + std::to_string(k) + "(" + g.name() + ")");
}

Graph TokenGraph(const Graph& g, int k, bool force) {
  Require(k >= 1 && k <= g.num_vertices(), "token graph needs 1 <= k <= n");
  return BuildTokenMoveGraph(g, k, ConfigSpace::Kind::kSubsets, force,
                             "F" + std::to_string(k) + "(" + g.name() + ")");
}

namespace {

enum class ProductKind { kStrong, kCartesian };

Graph Product(const Graph& g, const Graph& h, ProductKind kind, bool force,
              std::vector<std::string> labels, std::string name) {
  const std::uint64_t ng = g.num_vertices();
  const std::uint64_t nh = h.num_vertices();
  Guard(ng * nh <= kConstructionGuard, force,
        "product would have " + std::to_string(ng * nh) + " vertices");
  std::vector<std::vector<int>> adjacency(ng * nh);
  const auto index = [nh](int u, int v) { return static_cast<int>(u * nh + v); };
  for (int u = 0; u < static_cast<int>(ng); ++u) {
    for (int v = 0; v < static_cast<int>(nh); ++v) {
      auto& list = adjacency[index(u, v)];
      // Closed neighbourhoods in both factors; (u, v) itself is skipped.
      std::vector<int> gu{u};
      gu.insert(gu.end(), g.neighbors(u).begin(), g.neighbors(u).end());
      std::vector<int> hv{v};
      hv.insert(hv.end(), h.neighbors(v).begin(), h.neighbors(v).end());
      for (int a : gu) {
        for (int b : hv) {
          if (a == u && b == v) continue;
          if (kind == ProductKind::kCartesian && a != u && b != v) continue;
          list.push_back(index(a, b));
        }
      }
    }
  }
  return Graph::FromAdjacency(std::move(adjacency), std::move(labels),
                              std::move(name));
}

std::string StripParens(const std::string& label) {
  if (label.size() >= 2 && label.front() == '(' && label.back() == ')')
    return label.substr(1, label.size() - 2);
  return label;
}

std::vector<std::string> PairLabels(const Graph& g, const Graph& h,
                                    bool flatten_left) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(g.num_vertices()) * h.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u) {
    const std::string left = flatten_left ? StripParens(g.label(u)) : g.label(u);
    for (int v = 0; v < h.num_vertices(); ++v)
      labels.push_back("(" + left + "," + h.label(v) + ")");
  }
  return labels;
}

Graph Power(const Graph& g, int k, ProductKind kind, bool force,
            const std::string& symbol) {
  Require(k >= 1, "power needs k >= 1");
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(g.num_vertices());
    Guard(total <= kConstructionGuard, force,
          "power would exceed " + std::to_string(kConstructionGuard) + " vertices");
  }
  Graph result = g;
  for (int i = 1; i < k; ++i) {
    auto labels = PairLabels(result, g, i > 1);
    result = Product(result, g, kind, force, std::move(labels), "");
  }
  return result.WithName(g.name() + symbol + std::to_string(k));
}

}  // namespace

Graph StrongProduct(const Graph& g, const Graph& h, bool force) {
  return Product(g, h, ProductKind::kStrong, force, PairLabels(g, h, false),
                 g.name() + "x" + h.name());
}

Graph StrongPower(const Graph& g, int k, bool force) {
  return Power(g, k, ProductKind::kStrong, force, "^x");
}

Graph CartesianProduct(const Graph& g, const Graph& h, bool force) {
  return Product(g, h, ProductKind::kCartesian, force, PairLabels(g, h, false),
                 g.name() + "[]" + h.name());
}

Graph CartesianPower(const Graph& g, int k, bool force) {
  return Power(g, k, ProductKind::kCartesian, force, "^[]");
}

// ---------------------------------------------------------------------------

std::string AugmentedVertex::Label() const {
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
         std::to_string(layer);
}

std::vector<AugmentedVertex> AugmentedVertices(int n, int p) {
  Require(n >= 3, "augmented 2-token graph needs n >= 3");
  Require(p >= 0, "augmented 2-token graph needs p >= 0");
  ConfigSpace pairs(n, 2, ConfigSpace::Kind::kSubsets);
  std::vector<AugmentedVertex> out;
  out.reserve(pairs.size() + static_cast<std::size_t>(p) * n);
  int buf[2];
  for (std::uint64_t r = 0; r < pairs.size(); ++r) {
    pairs.Unrank(r, buf);
    out.push_back({buf[0], buf[1], 0});
  }
  for (int layer = 1; layer <= p; ++layer) {
    for (int i = 0; i < n; ++i) {
      if (layer % 2 == 1) {
        out.push_back({i, i, layer});
      } else {
        const int j = (i + 1) % n;
        out.push_back({std::min(i, j), std::max(i, j), layer});
      }
    }
  }
  return out;
}

Graph AugmentedTwoTokenCycle(int n, int p, bool force) {
  Require(n >= 3, "augmented 2-token graph needs n >= 3");
  Require(p >= 0, "augmented 2-token graph needs p >= 0");
  const std::uint64_t total = Binomial(n, 2) + static_cast<std::uint64_t>(p) * n;
  Guard(total <= kConstructionGuard, force,
        "augmented graph would have " + std::to_string(total) + " vertices");

  const Graph base = TokenGraph(MakeCycle(n), 2);
  ConfigSpace pairs(n, 2, ConfigSpace::Kind::kSubsets);
  const int layer0 = base.num_vertices();
  const auto pair_index = [&](int a, int b) {
    a = ((a % n) + n) % n;
    b = ((b % n) + n) % n;
    const int sorted[2] = {std::min(a, b), std::max(a, b)};
    return static_cast<int>(pairs.Rank(sorted));
  };
  const auto layer_index = [&](int layer, int i) {
    return layer0 + (layer - 1) * n + ((i % n) + n) % n;
  };

  std::vector<Edge> edges = base.edges();
  for (int layer = 1; layer <= p; ++layer) {
    for (int i = 0; i < n; ++i) {
      const int v = layer_index(layer, i);
      if (layer % 2 == 1) {
        // {i,i}^r ~ {i,i+1}^{r-1}, {i-1,i}^{r-1}
        if (layer == 1) {
          edges.emplace_back(v, pair_index(i, i + 1));
          edges.emplace_back(v, pair_index(i - 1, i));
        } else {
          edges.emplace_back(v, layer_index(layer - 1, i));
          edges.emplace_back(v, layer_index(layer - 1, i - 1));
        }
      } else {
        // {i,i+1}^s ~ {i,i}^{s-1}, {i+1,i+1}^{s-1}
        edges.emplace_back(v, layer_index(layer - 1, i));
        edges.emplace_back(v, layer_index(layer - 1, i + 1));
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& av : AugmentedVertices(n, p)) labels.push_back(av.Label());
  return Graph::FromEdges(static_cast<int>(total), edges, std::move(labels),
                          "F2^" + std::to_string(p) + "(C" + std::to_string(n) + ")");
}

// ---------------------------------------------------------------------------

std::vector<int> EmbedSupertoken(int n, int k, int anchor) {
  Require(anchor >= 0 && anchor < n, "anchor vertex out of range");
  ConfigSpace small(n, k, ConfigSpace::Kind::kMultisets);
  ConfigSpace big(n, k + 1, ConfigSpace::Kind::kMultisets);
  std::vector<int> map(small.size());
  std::vector<int> buf(k);
  for (std::uint64_t r = 0; r < small.size(); ++r) {
    small.Unrank(r, buf);
    std::vector<int> grown = buf;
    grown.insert(std::upper_bound(grown.begin(), grown.end(), anchor), anchor);
    map[r] = static_cast<int>(big.Rank(grown));
  }
  return map;
}

std::vector<int> EmbedToken(int n, int k) {
  ConfigSpace subsets(n, k, ConfigSpace::Kind::kSubsets);
  ConfigSpace multisets(n, k, ConfigSpace::Kind::kMultisets);
  std::vector<int> map(subsets.size());
  std::vector<int> buf(k);
  for (std::uint64_t r = 0; r < subsets.size(); ++r) {
    subsets.Unrank(r, buf);
    map[r] = static_cast<int>(multisets.Rank(buf));
  }
  return map;
}

bool IsInducedEmbedding(const Graph& small, const Graph& big,
                        std::span<const int> map) {
  const int n = small.num_vertices();
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<char> used(big.num_vertices(), 0);
  for (int x : map) {
    if (x < 0 || x >= big.num_vertices() || used[x]) return false;
    used[x] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (small.adjacent(u, v) != big.adjacent(map[u], map[v])) return false;
  return true;
}

}  // namespace supertoken
