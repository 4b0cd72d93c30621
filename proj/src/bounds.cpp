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

#include "supertoken/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "supertoken/error.hpp"

namespace supertoken {

BigInt BigBinomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt MultisetBinomial(int c, int pi) {
  if (pi == 0) return 1;
  return BigBinomial(c + pi - 1, pi);
}

int ColorClassPartition::num_colors() const {
  if (coloring.empty()) return 0;
  return *std::max_element(coloring.begin(), coloring.end()) + 1;
}

std::vector<int> ColorClassPartition::class_sizes() const {
  std::vector<int> sizes(num_colors(), 0);
  for (int c : coloring) ++sizes[c];
  return sizes;
}

void ValidatePartition(const Graph& g, const ColorClassPartition& p) {
  Require(static_cast<int>(p.coloring.size()) == g.num_vertices(),
          "colouring has the wrong length");
  Require(p.k >= 1, "k must be at least 1");
  for (int c : p.coloring) Require(c >= 0, "negative colour");
  for (auto [u, v] : g.edges())
    Require(p.coloring[u] != p.coloring[v], "colouring is not proper");
  const auto sizes = p.class_sizes();
  for (std::size_t c = 0; c < sizes.size(); ++c)
    Require(sizes[c] > 0, "colour " + std::to_string(c) + " is unused");

  std::vector<int> owner(sizes.size(), -1);
  for (std::size_t j = 0; j < p.groups.size(); ++j) {
    const auto& group = p.groups[j];
    Require(group.colors.size() == group.tokens.size(),
            "group colours and token counts differ in length");
    const int tau = static_cast<int>(group.colors.size());
    Require(tau >= 1 && tau <= p.k, "group size must lie in [1, k]");
    int total = 0;
    for (int h = 0; h < tau; ++h) {
      const int c = group.colors[h];
      Require(c >= 0 && c < static_cast<int>(sizes.size()), "unknown colour");
      Require(owner[c] < 0, "colour " + std::to_string(c) + " in two groups");
      owner[c] = static_cast<int>(j);
      Require(group.tokens[h] >= 1, "token counts must be positive");
      total += group.tokens[h];
    }
    Require(total == p.k, "token counts of a group must sum to k");
  }
  for (std::size_t c = 0; c < owner.size(); ++c)
    Require(owner[c] >= 0, "colour " + std::to_string(c) + " in no group");
  Require(p.k > 1 || p.groups.size() == 1,
          "with k = 1 the bound needs a single group");
}

BigInt PartitionBound(const Graph& g, const ColorClassPartition& p) {
  ValidatePartition(g, p);
  const auto sizes = p.class_sizes();
  BigInt total = 0;
  for (const auto& group : p.groups) {
    BigInt product = 1;
    for (std::size_t h = 0; h < group.colors.size(); ++h)
      product *= MultisetBinomial(sizes[group.colors[h]], group.tokens[h]);
    total += product;
  }
  return total;
}

namespace {

struct GroupChoice {
  BigInt value = 0;
  std::vector<int> tokens;
  bool balanced_optimum = false;
};

// All positive compositions of k into `parts` parts, lexicographic order.
void ForEachComposition(int k, int parts,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> comp(parts);
  std::function<void(int, int)> rec = [&](int index, int left) {
    if (index == parts - 1) {
      comp[index] = left;
      fn(comp);
      return;
    }
    for (int v = 1; v <= left - (parts - index - 1); ++v) {
      comp[index] = v;
      rec(index + 1, left - v);
    }
  };
  if (parts >= 1 && parts <= k) rec(0, k);
}

GroupChoice BestComposition(const std::vector<int>& class_sizes, int k) {
  const int tau = static_cast<int>(class_sizes.size());
  GroupChoice best;
  bool balanced_hit = false;
  std::vector<std::pair<BigInt, bool>> seen;
  ForEachComposition(k, tau, [&](const std::vector<int>& comp) {
    BigInt value = 1;
    for (int h = 0; h < tau; ++h) value *= MultisetBinomial(class_sizes[h], comp[h]);
    const auto [lo, hi] = std::minmax_element(comp.begin(), comp.end());
    seen.emplace_back(value, *hi - *lo <= 1);
    if (best.tokens.empty() || value > best.value) {
      best.value = value;
      best.tokens = comp;
    }
  });
  for (const auto& [value, balanced] : seen)
    if (balanced && value == best.value) balanced_hit = true;
  best.balanced_optimum = balanced_hit;
  return best;
}

}  // namespace

BigInt BestGroupValue(const std::vector<int>& class_sizes, int k) {
  Require(!class_sizes.empty() && static_cast<int>(class_sizes.size()) <= k,
          "group size must lie in [1, k]");
  return BestComposition(class_sizes, k).value;
}

BigInt GroupingBound(const std::vector<int>& class_sizes,
                     const std::vector<int>& block_sizes, int k) {
  Require(k >= 1, "k must be at least 1");
  std::size_t next = 0;
  BigInt total = 0;
  for (int tau : block_sizes) {
    Require(tau >= 1 && tau <= k, "block size must lie in [1, k]");
    Require(next + tau <= class_sizes.size(), "blocks exceed the colour classes");
    std::vector<int> sizes(class_sizes.begin() + next,
                           class_sizes.begin() + next + tau);
    total += BestGroupValue(sizes, k);
    next += tau;
  }
  Require(next == class_sizes.size(), "blocks must cover every colour class");
  Require(k > 1 || block_sizes.size() == 1,
          "with k = 1 the bound needs a single group");
  return total;
}

BestPartition BestPartitionBound(const Graph& g, const std::vector<int>& coloring,
                                 int k, bool force) {
  ColorClassPartition probe{coloring, {}, k};
  Require(static_cast<int>(coloring.size()) == g.num_vertices(),
          "colouring has the wrong length");
  Require(k >= 1, "k must be at least 1");
  const int chi = probe.num_colors();
  Guard(chi <= kBestPartitionMaxColors && k <= kBestPartitionMaxTokens, force,
        "partition enumeration with " + std::to_string(chi) + " colours and k = " +
            std::to_string(k) + " (limits " +
            std::to_string(kBestPartitionMaxColors) + ", " +
            std::to_string(kBestPartitionMaxTokens) + ")");
  const auto sizes = probe.class_sizes();

  std::map<std::vector<int>, GroupChoice> cache;
  auto choice_for = [&](const std::vector<int>& block) -> const GroupChoice& {
    auto it = cache.find(block);
    if (it == cache.end()) {
      std::vector<int> block_sizes;
      for (int c : block) block_sizes.push_back(sizes[c]);
      it = cache.emplace(block, BestComposition(block_sizes, k)).first;
    }
    return it->second;
  };

  BestPartition best;
  bool found = false;
  std::vector<int> rgs(chi, 0);
  std::function<void(int, int)> rec = [&](int index, int max_block) {
    if (index == chi) {
      std::vector<std::vector<int>> blocks(max_block + 1);
      for (int c = 0; c < chi; ++c) blocks[rgs[c]].push_back(c);
      for (const auto& b : blocks)
        if (static_cast<int>(b.size()) > k) return;
      if (k == 1 && blocks.size() != 1) return;
      ++best.partitions_enumerated;
      BigInt value = 0;
      for (const auto& b : blocks) {
        const auto& choice = choice_for(b);
        value += choice.value;
        if (b.size() >= 2) {
          ++best.heuristic.blocks;
          if (choice.balanced_optimum) ++best.heuristic.balanced;
        }
      }
      if (!found || value > best.value) {
        found = true;
        best.value = value;
        best.partition = ColorClassPartition{coloring, {}, k};
        for (const auto& b : blocks)
          best.partition.groups.push_back(ColorGroup{b, choice_for(b).tokens});
      }
      return;
    }
    for (int v = 0; v <= max_block + 1; ++v) {
      rgs[index] = v;
      rec(index + 1, std::max(max_block, v));
    }
  };
  if (chi >= 1) {
    rgs[0] = 0;
    rec(1, 0);
  }
  if (!found) {
    Fail(ErrorKind::kInvalidParameter,
         "no admissible grouping of " + std::to_string(chi) +
             " colour classes for k = " + std::to_string(k));
  }
  ValidatePartition(g, best.partition);
  return best;
}

namespace {

// All `size`-multisets over `items`, each ascending.
void Multisets(const std::vector<int>& items, int size, std::size_t from,
               std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < items.size(); ++i) {
    current.push_back(items[i]);
    Multisets(items, size, i, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<TokenConfig> PartitionWitness(const Graph& g,
                                          const ColorClassPartition& p,
                                          bool force) {
  ValidatePartition(g, p);
  const int n = g.num_vertices();
  Guard(MultisetCount(n, p.k) <= kConstructionGuard, force,
        "witness for a supertoken graph with more than " +
            std::to_string(kConstructionGuard) + " vertices");
  std::vector<std::vector<int>> members(p.num_colors());
  for (int v = 0; v < n; ++v) members[p.coloring[v]].push_back(v);

  std::vector<std::pair<std::uint64_t, TokenConfig>> ranked;
  for (const auto& group : p.groups) {
    std::vector<std::vector<std::vector<int>>> options;
    for (std::size_t h = 0; h < group.colors.size(); ++h) {
      std::vector<std::vector<int>> sets;
      std::vector<int> current;
      Multisets(members[group.colors[h]], group.tokens[h], 0, current, sets);
      options.push_back(std::move(sets));
    }
    std::vector<int> counts(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t h) {
      if (h == options.size()) {
        TokenConfig config{counts};
        ranked.emplace_back(RankConfig(config), std::move(config));
        return;
      }
      for (const auto& set : options[h]) {
        for (int v : set) ++counts[v];
        rec(h + 1);
        for (int v : set) --counts[v];
      }
    };
    rec(0);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TokenConfig> out;
  out.reserve(ranked.size());
  for (auto& [rank, config] : ranked) out.push_back(std::move(config));
  return out;
}

BigInt BipartiteBound(int c1, int c2, int k) {
  Require(c1 >= 1 && c2 >= 1, "class sizes must be positive");
  Require(k >= 0, "k must be non-negative");
  BigInt total = 0;
  for (int i = 0; 2 * i <= k; ++i)
    total += MultisetBinomial(c1, 2 * i) * MultisetBinomial(c2, k - 2 * i);
  return total;
}

StableSets BipartiteStableSets(const Graph& g, int k) {
  Require(k >= 1, "k must be at least 1");
  const auto parts = Bipartition(g);
  Require(parts.has_value(), "graph '" + g.name() + "' is not bipartite");
  StableSets out;
  out.c1 = parts->first;
  out.c2 = parts->second;
  std::vector<char> in_c1(g.num_vertices(), 0);
  for (int v : out.c1) in_c1[v] = 1;

  const ConfigSpace space(g.num_vertices(), k, ConfigSpace::Kind::kMultisets);
  std::vector<int> buf(k);
  for (std::uint64_t r = 0; r < space.size(); ++r) {
    space.Unrank(r, buf);
    int on_c1 = 0;
    for (int v : buf) on_c1 += in_c1[v];
    (on_c1 % 2 == 1 ? out.s1 : out.s2).push_back(static_cast<int>(r));
  }
  return out;
}

std::int64_t AlphaSupertoken2Cycle(int n) {
  Require(n >= 2, "n must be at least 2");
  const std::int64_t r = n / 4;
  return n % 4 <= 1 ? r * (n + 2) : (r + 1) * n;
}

std::vector<TokenConfig> IndependentSet2Cycle(int n) {
  Require(n >= 2, "n must be at least 2");
  const int r = n / 4;
  std::vector<std::pair<std::uint64_t, TokenConfig>> ranked;
  auto add = [&](int a, int b) {
    const int pair[2] = {std::min(a % n, b % n), std::max(a % n, b % n)};
    TokenConfig config = TokenConfig::FromMultiset(n, pair);
    ranked.emplace_back(RankConfig(config), std::move(config));
  };
  if (n % 4 <= 1) {
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < n; ++i) add(i, i + 2 * j);
    for (int i = 0; i < 2 * r; ++i) add(i, i + 2 * r);
  } else {
    for (int j = 0; j <= r; ++j)
      for (int i = 0; i < n; ++i) add(i, i + 2 * j);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ranked.erase(std::unique(ranked.begin(), ranked.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               ranked.end());
  if (static_cast<std::int64_t>(ranked.size()) != AlphaSupertoken2Cycle(n)) {
    Fail(ErrorKind::kPropertyViolation,
         "construction for n = " + std::to_string(n) + " has " +
             std::to_string(ranked.size()) + " configurations, expected " +
             std::to_string(AlphaSupertoken2Cycle(n)));
  }
  std::vector<TokenConfig> out;
  for (auto& [rank, config] : ranked) out.push_back(std::move(config));
  return out;
}

Rational AlphaAugmented(int n, int p) {
  Require(n >= 2, "n must be at least 2");
  Require(p >= 0, "p must be non-negative");
  const Rational half(1, 2);
  const Rational r = n / 4;
  const Rational lift = Rational(p) / 2;
  const bool even_p = p % 2 == 0;
  Rational value;
  switch (n % 4) {
    case 0:
      value = (r + lift) * n;
      break;
    case 1:
      value = (r + lift) * n - (even_p ? Rational(0) : half);
      break;
    case 2:
      value = (r + lift + half) * n;
      break;
    default:
      value = (r + lift + half) * n - (even_p ? half : Rational(0));
      break;
  }
  if (boost::multiprecision::denominator(value) != 1) {
    Fail(ErrorKind::kFormulaInconsistency,
         "alpha(F_2^" + std::to_string(p) + "(C_" + std::to_string(n) +
             ")) evaluates to the non-integer " + value.str());
  }
  if (p == 0 && value != Rational((n * (n / 2)) / 2)) {
    Fail(ErrorKind::kFormulaInconsistency,
         "p = 0 value disagrees with floor(n floor(n/2) / 2)");
  }
  if (p == 1 && value != Rational(AlphaSupertoken2Cycle(n))) {
    Fail(ErrorKind::kFormulaInconsistency,
         "p = 1 value disagrees with alpha(F_2(C_n))");
  }
  return value;
}

double InformationRate(const BigInt& alpha, int k) {
  Require(alpha >= 1, "alpha must be at least 1");
  Require(k >= 1, "k must be at least 1");
  return std::log2(alpha.convert_to<double>()) / k;
}

BigInt ShannonLowerBound(const Graph& g, const ColorClassPartition& p) {
  return PartitionBound(g, p);
}

std::vector<BigInt> Table3Row(int c, int k_max) {
  Require(c >= 1, "c must be at least 1");
  Require(k_max >= 0, "k_max must be non-negative");
  std::vector<BigInt> row;
  for (int k = 0; k <= k_max; ++k) row.push_back(BipartiteBound(c, c, k));
  return row;
}

}  // namespace supertoken
