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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "supertoken/error.hpp"
#include "supertoken/spectral.hpp"
#include "supertoken/tokens.hpp"

namespace supertoken {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> CycleEigs(int n) {
  std::vector<double> out;
  for (int j = 0; j < n; ++j) out.push_back(2 * std::cos(2 * kPi * j / n));
  return out;
}

TEST(Spectrum, KnownFamilies) {
  EXPECT_TRUE(MultisetEqual(AdjacencySpectrum(MakeCycle(9)).eigenvalues(), CycleEigs(9), 1e-10));
  const Spectrum k5 = AdjacencySpectrum(MakeComplete(5));
  EXPECT_TRUE(MultisetEqual(k5.eigenvalues(), {-1, -1, -1, -1, 4}, 1e-10));
  const Spectrum pet = AdjacencySpectrum(MakePetersen());
  EXPECT_TRUE(MultisetEqual(pet.eigenvalues(), {-2, -2, -2, -2, 1, 1, 1, 1, 1, 3}, 1e-10));
  const Spectrum lap = LaplacianSpectrum(MakeComplete(4));
  EXPECT_TRUE(MultisetEqual(lap.eigenvalues(), {0, 4, 4, 4}, 1e-10));
}

TEST(Spectrum, TraceIdentities) {
  const Graph g = SupertokenGraph(MakePetersen(), 2);
  const Spectrum s = AdjacencySpectrum(g);
  EXPECT_NEAR(s.sum(), 0, 1e-8);
  EXPECT_NEAR(s.sum_of_squares(), 2.0 * g.num_edges(), 1e-8);
  const Inertia in = s.inertia();
  EXPECT_EQ(in.negative + in.zero + in.positive, g.num_vertices());
}

TEST(Spectrum, ZeroTolerance) {
  const Spectrum s = Spectrum::FromValues({-1e-7, 0, 2}, 1e-6);
  EXPECT_EQ(s.inertia().zero, 2);
  EXPECT_EQ(Spectrum::FromValues({-1e-7, 0, 2}, 1e-9).inertia().negative, 1);
  EXPECT_THROW(AdjacencySpectrum(MakeCycle(2001)), Error);
}

TEST(Quotient, K4ThreeTokensLaplacian) {
  const Graph g = SupertokenGraph(MakeComplete(4), 3);
  std::vector<std::vector<int>> by_degree(3);
  for (int v = 0; v < g.num_vertices(); ++v)
    by_degree[g.degree(v) / 3 - 1].push_back(v);  // degrees 3, 6, 9
  const auto q = EquitableCheck(g, VertexPartition::FromClasses(g.num_vertices(), by_degree));
  ASSERT_TRUE(q.has_value());
  const QuotientMatrix l = LaplacianQuotient(*q);
  const std::vector<double> expected = {3, -3, 0, -1, 3, -2, 0, -6, 6};
  EXPECT_EQ(l.entries, expected);
  const Spectrum s = QuotientSpectrum(l);
  EXPECT_TRUE(MultisetEqual(s.eigenvalues(), {0, 6 - std::sqrt(6.0), 6 + std::sqrt(6.0)}, 1e-9));
  const Spectrum full = LaplacianSpectrum(g);
  for (double x : s.eigenvalues()) EXPECT_TRUE(SpectrumContains(full, x, 1e-9));
}

TEST(Quotient, RejectsInconsistentMatrices) {
  QuotientMatrix q;
  q.dimension = 2;
  q.entries = {0, 1, 3, 0};
  q.class_sizes = {1, 1};
  EXPECT_THROW(QuotientSpectrum(q), Error);
}

TEST(Interlacing, InducedSubgraphsInterlace) {
  const Graph pet = MakePetersen();
  const std::vector<int> keep = {0, 1, 2, 3, 5, 7};
  EXPECT_TRUE(InterlacingCheck(AdjacencySpectrum(pet.InducedSubgraph(keep)),
                               AdjacencySpectrum(pet)));
  // A spectrum with a larger top eigenvalue cannot interlace.
  EXPECT_FALSE(InterlacingCheck(Spectrum::FromValues({5}), AdjacencySpectrum(MakeCycle(4))));
}

TEST(ClosedForms, TwoCycleEigenvaluesMatchNumeric) {
  for (int n : {3, 5, 7, 9, 11}) {
    std::vector<double> closed;
    for (const auto& e : Supertoken2CycleEigs(n)) closed.push_back(e.value);
    EXPECT_TRUE(MultisetEqual(
        closed, AdjacencySpectrum(SupertokenGraph(MakeCycle(n), 2)).eigenvalues(), 1e-9))
        << n;
  }
  EXPECT_THROW(Supertoken2CycleEigs(8), Error);
}

TEST(ClosedForms, VoltageMatrixSpectrum) {
  for (int r = 0; r < 7; ++r) {
    const Spectrum s = VoltageBstar(7, r).Eigenvalues();
    std::vector<double> closed;
    for (const auto& e : Supertoken2CycleEigs(7))
      if (e.r == r) closed.push_back(e.value);
    EXPECT_TRUE(MultisetEqual(s.eigenvalues(), closed, 1e-10)) << r;
  }
}

TEST(ClosedForms, CvetkovicTight) {
  for (int n : {5, 7, 9, 11}) {
    const Spectrum s = AdjacencySpectrum(SupertokenGraph(MakeCycle(n), 2));
    const int alpha = (n % 4 == 1) ? (n / 4) * (n + 2) : (n / 4 + 1) * n;
    EXPECT_EQ(CvetkovicBound(s), alpha) << n;
    EXPECT_TRUE(Monotonicity(n).all_monotone);
  }
}

TEST(ClosedForms, PhiRoots) {
  EXPECT_DOUBLE_EQ(PhiEval(2, 3), 1);
  EXPECT_DOUBLE_EQ(PhiEval(3, 2), -16);
  for (int r = 2; r <= 12; ++r) {
    EXPECT_NEAR(PhiMaxRoot(r), 4 * std::cos(kPi / (2 * r)), 1e-12) << r;
    EXPECT_NEAR(PhiEval(r, PhiMaxRoot(r)), 0, 1e-6);
  }
}

TEST(ClosedForms, AugmentedOdd) {
  for (int n : {3, 5, 7, 9}) {
    for (int p = 0; p <= 3; ++p) {
      const Graph g = AugmentedTwoTokenCycle(n, p);
      const auto q = EquitableCheck(g, AugmentedPartition(n, p));
      ASSERT_TRUE(q.has_value());
      const QuotientMatrix closed = AugmentedQuotient(n, p);
      EXPECT_EQ(q->entries, closed.entries);
      const Spectrum full = AdjacencySpectrum(g);
      const auto eigs = AugmentedOddEigs(n, p);
      EXPECT_NEAR(full.spectral_radius(), eigs.front(), 1e-9);
      for (double x : eigs) EXPECT_TRUE(SpectrumContains(full, x, 1e-9));
      // Q v_i = lambda_i v_i
      const auto vecs = AugmentedOddEigvecs(n, p);
      for (std::size_t i = 0; i < vecs.size(); ++i)
        for (int row = 0; row < closed.dimension; ++row) {
          double acc = 0;
          for (int col = 0; col < closed.dimension; ++col) acc += closed.at(row, col) * vecs[i][col];
          EXPECT_NEAR(acc, eigs[i] * vecs[i][row], 1e-9);
        }
    }
  }
}

TEST(ClosedForms, AugmentedEvenRadius) {
  for (int n : {4, 6, 8}) {
    for (int p = 0; p <= 3; ++p) {
      const int r = n / 2 + p;
      EXPECT_NEAR(AdjacencySpectrum(AugmentedTwoTokenCycle(n, p)).spectral_radius(),
                  PhiMaxRoot(r), 1e-6)
          << n << " " << p;
      const auto q = EquitableCheck(AugmentedTwoTokenCycle(n, p), AugmentedPartition(n, p));
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(q->entries, AugmentedQuotient(n, p).entries);
    }
  }
}

}  // namespace
}  // namespace supertoken
