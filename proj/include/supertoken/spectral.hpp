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

#ifndef SUPERTOKEN_SPECTRAL_HPP_
#define SUPERTOKEN_SPECTRAL_HPP_

#include <vector>

#include <Eigen/Dense>

#include "supertoken/graph.hpp"

namespace supertoken {

struct Inertia {
  int negative = 0;
  int zero = 0;
  int positive = 0;
};

// Real spectrum, ascending, with multiplicity.
class Spectrum {
 public:
  Spectrum() = default;
  // A negative zero_tol selects the default 1e-8 * max(1, spectral radius).
  static Spectrum FromValues(std::vector<double> values, double zero_tol = -1);

  const std::vector<double>& eigenvalues() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  double zero_tol() const { return zero_tol_; }
  // max |lambda|
  double spectral_radius() const;
  Inertia inertia() const;
  double sum() const;
  double sum_of_squares() const;

 private:
  std::vector<double> values_;
  double zero_tol_ = 0;
};

inline constexpr int kSpectrumGuard = 2000;

Eigen::MatrixXd AdjacencyMatrix(const Graph& g);
Eigen::MatrixXd LaplacianMatrix(const Graph& g);

// Eigenvalues of a symmetric matrix.
Spectrum SymmetricSpectrum(const Eigen::MatrixXd& m, double zero_tol = -1);

Spectrum AdjacencySpectrum(const Graph& g, bool force = false,
                           double zero_tol = -1);
Spectrum LaplacianSpectrum(const Graph& g, bool force = false,
                           double zero_tol = -1);

// diag(row sums) - B for an adjacency-flavour quotient B.
QuotientMatrix LaplacianQuotient(const QuotientMatrix& adjacency);

// Eigenvalues of Q through the symmetric matrix D^{1/2} Q D^{-1/2},
// D = diag(class sizes). Throws invalid-parameter unless
// size_i Q_ij = size_j Q_ji (and, for the Laplacian flavour, rows sum to 0).
Spectrum QuotientSpectrum(const QuotientMatrix& q, double zero_tol = -1);

// With both spectra sorted descending, checks
// outer_i >= inner_i >= outer_{i + N - m} for all i, up to tol.
bool InterlacingCheck(const Spectrum& inner, const Spectrum& outer,
                      double tol = 1e-9);

// Symmetric tridiagonal matrix.
struct TridiagonalSpec {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size dimension - 1

  int dimension() const { return static_cast<int>(diagonal.size()); }
  Eigen::MatrixXd Dense() const;
  Spectrum Eigenvalues() const;
};

// Real form of the voltage matrix for F_2(C_n), n odd: (n+1)/2 square,
// off-diagonals 2cos(r pi / n), zero diagonal except the last entry
// 2(-1)^r cos(r pi / n).
TridiagonalSpec VoltageBstar(int n, int r);

struct IndexedEigenvalue {
  int r = 0;
  int k = 0;
  double value = 0;
};

// 4(-1)^{r+1} cos(r pi / n) cos(2 k pi / (n + 2)) for r = 0..n-1,
// k = 1..ceil(n/2); n odd.
std::vector<IndexedEigenvalue> Supertoken2CycleEigs(int n);

// N - max(n+, n-).
int CvetkovicBound(const Spectrum& s);

// 4cos((2i - 1) pi / (n + 2p)) for i = 1..floor(n/2) + p; n odd.
std::vector<double> AugmentedOddEigs(int n, int p);
// v_i(j) = cos((2i - 1)(2j - 1) pi / (2(n + 2p))), j = 1..floor(n/2) + p.
// These are eigenvectors of AugmentedQuotient(n, p).
std::vector<std::vector<double>> AugmentedOddEigvecs(int n, int p);

// Partition of F_2^p(C_n) (vertex order of AugmentedTwoTokenCycle): the
// layer-0 pairs grouped by cyclic distance, largest distance first, then one
// class per added layer.
VertexPartition AugmentedPartition(int n, int p);
// Closed-form quotient for that partition. Odd n: tridiagonal with all
// entries 2 including the top-left corner. Even n: tridiagonal 2s except
// entry (0, 1) = 4, zero diagonal.
QuotientMatrix AugmentedQuotient(int n, int p);

// phi_2 = x^2 - 8, phi_3 = x^3 - 12x, phi_r = x phi_{r-1} - 4 phi_{r-2}.
double PhiEval(int r, double x);
// Largest root of phi_r. The roots of phi_{r-1} interlace those of phi_r, so
// the bracket (maxroot(phi_{r-1}), 4) holds exactly one root; bisection there.
double PhiMaxRoot(int r);

struct MonotonicityRow {
  int r = 0;
  bool monotone = false;
  int direction = 0;  // +1 increasing in k, -1 decreasing
  int positive = 0;
  int negative = 0;
};

struct MonotonicityReport {
  int n = 0;
  std::vector<MonotonicityRow> rows;
  int positive = 0;
  int negative = 0;
  bool all_monotone = false;
};

// Sign and monotonicity profile of lambda(r, .) over k = 1..ceil(n/2).
MonotonicityReport Monotonicity(int n);

bool SpectrumContains(const Spectrum& s, double value, double tol);
// Same length and pairwise within tol after sorting.
bool MultisetEqual(std::vector<double> a, std::vector<double> b, double tol);

}  // namespace supertoken

#endif  // SUPERTOKEN_SPECTRAL_HPP_
