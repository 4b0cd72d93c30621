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

#include "supertoken/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "supertoken/error.hpp"
#include "supertoken/tokens.hpp"

namespace supertoken {

Spectrum Spectrum::FromValues(std::vector<double> values, double zero_tol) {
  Spectrum s;
  std::sort(values.begin(), values.end());
  s.values_ = std::move(values);
  s.zero_tol_ = zero_tol >= 0 ? zero_tol : 1e-8 * std::max(1.0, s.spectral_radius());
  return s;
}

double Spectrum::spectral_radius() const {
  double rho = 0;
  for (double v : values_) rho = std::max(rho, std::abs(v));
  return rho;
}

Inertia Spectrum::inertia() const {
  Inertia in;
  for (double v : values_) {
    if (v > zero_tol_) {
      ++in.positive;
    } else if (v < -zero_tol_) {
      ++in.negative;
    } else {
      ++in.zero;
    }
  }
  return in;
}

double Spectrum::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double Spectrum::sum_of_squares() const {
  double s = 0;
  for (double v : values_) s += v * v;
  return s;
}

Eigen::MatrixXd AdjacencyMatrix(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) a(v, u) = 1;
  return a;
}

Eigen::MatrixXd LaplacianMatrix(const Graph& g) {
  Eigen::MatrixXd l = -AdjacencyMatrix(g);
  for (int v = 0; v < g.num_vertices(); ++v) l(v, v) = g.degree(v);
  return l;
}

Spectrum SymmetricSpectrum(const Eigen::MatrixXd& m, double zero_tol) {
  if (m.rows() == 0) return Spectrum::FromValues({}, zero_tol);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    Fail(ErrorKind::kPropertyViolation, "symmetric eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return Spectrum::FromValues(std::vector<double>(ev.data(), ev.data() + ev.size()),
                              zero_tol);
}

namespace {

void SpectrumGuard(const Graph& g, bool force) {
  Guard(g.num_vertices() <= kSpectrumGuard, force,
        "spectrum of " + std::to_string(g.num_vertices()) + " vertices (limit " +
            std::to_string(kSpectrumGuard) + ")");
}

}  // namespace

Spectrum AdjacencySpectrum(const Graph& g, bool force, double zero_tol) {
  SpectrumGuard(g, force);
  return SymmetricSpectrum(AdjacencyMatrix(g), zero_tol);
}

Spectrum LaplacianSpectrum(const Graph& g, bool force, double zero_tol) {
  SpectrumGuard(g, force);
  return SymmetricSpectrum(LaplacianMatrix(g), zero_tol);
}

QuotientMatrix LaplacianQuotient(const QuotientMatrix& adjacency) {
  Require(adjacency.flavor == QuotientFlavor::kAdjacency,
          "expected an adjacency quotient");
  QuotientMatrix l = adjacency;
  l.flavor = QuotientFlavor::kLaplacian;
  const int d = adjacency.dimension;
  for (int i = 0; i < d; ++i) {
    double degree = 0;
    for (int j = 0; j < d; ++j) degree += adjacency.at(i, j);
    for (int j = 0; j < d; ++j) l.at(i, j) = -adjacency.at(i, j);
    l.at(i, i) += degree;
  }
  return l;
}

Spectrum QuotientSpectrum(const QuotientMatrix& q, double zero_tol) {
  const int d = q.dimension;
  Require(static_cast<int>(q.entries.size()) == d * d &&
              static_cast<int>(q.class_sizes.size()) == d,
          "malformed quotient matrix");
  double scale = 1;
  for (double x : q.entries) scale = std::max(scale, std::abs(x));
  for (int s : q.class_sizes) Require(s > 0, "class sizes must be positive");
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double lhs = q.class_sizes[i] * q.at(i, j);
      const double rhs = q.class_sizes[j] * q.at(j, i);
      Require(std::abs(lhs - rhs) <= 1e-9 * scale * std::max(q.class_sizes[i], q.class_sizes[j]),
              "quotient matrix violates weighted symmetry at (" +
                  std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  if (q.flavor == QuotientFlavor::kLaplacian) {
    for (int i = 0; i < d; ++i) {
      double row = 0;
      for (int j = 0; j < d; ++j) row += q.at(i, j);
      Require(std::abs(row) <= 1e-9 * scale * d, "Laplacian quotient row does not sum to 0");
    }
  }
  Eigen::MatrixXd s(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      s(i, j) = std::sqrt(static_cast<double>(q.class_sizes[i]) / q.class_sizes[j]) *
                q.at(i, j);
  return SymmetricSpectrum(0.5 * (s + s.transpose()), zero_tol);
}

bool InterlacingCheck(const Spectrum& inner, const Spectrum& outer, double tol) {
  const int m = inner.size();
  const int big_n = outer.size();
  Require(m <= big_n, "inner spectrum is larger than the outer one");
  // Descending index i maps to ascending index size - 1 - i.
  auto in = [&](int i) { return inner.eigenvalues()[m - 1 - i]; };
  auto out = [&](int i) { return outer.eigenvalues()[big_n - 1 - i]; };
  for (int i = 0; i < m; ++i) {
    if (out(i) < in(i) - tol) return false;
    if (in(i) < out(i + big_n - m) - tol) return false;
  }
  return true;
}

Eigen::MatrixXd TridiagonalSpec::Dense() const {
  const int d = dimension();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = diagonal[i];
  for (int i = 0; i + 1 < d; ++i) {
    m(i, i + 1) = off_diagonal[i];
    m(i + 1, i) = off_diagonal[i];
  }
  return m;
}

Spectrum TridiagonalSpec::Eigenvalues() const { return SymmetricSpectrum(Dense()); }

TridiagonalSpec VoltageBstar(int n, int r) {
  Require(n >= 3 && n % 2 == 1, "n must be odd and at least 3");
  Require(r >= 0 && r < n, "r must lie in [0, n)");
  const int kappa = (n + 1) / 2;
  const double c = 2 * std::cos(r * std::numbers::pi / n);
  TridiagonalSpec spec;
  spec.diagonal.assign(kappa, 0.0);
  spec.off_diagonal.assign(kappa - 1, c);
  spec.diagonal.back() = (r % 2 == 0 ? 1 : -1) * c;
  return spec;
}

std::vector<IndexedEigenvalue> Supertoken2CycleEigs(int n) {
  Require(n >= 3 && n % 2 == 1, "n must be odd and at least 3");
  std::vector<IndexedEigenvalue> out;
  const int kmax = (n + 1) / 2;
  for (int r = 0; r < n; ++r) {
    const double sign = r % 2 == 0 ? -1.0 : 1.0;
    for (int k = 1; k <= kmax; ++k) {
      out.push_back({r, k,
                     4 * sign * std::cos(r * std::numbers::pi / n) *
                         std::cos(2 * k * std::numbers::pi / (n + 2))});
    }
  }
  return out;
}

int CvetkovicBound(const Spectrum& s) {
  const Inertia in = s.inertia();
  return s.size() - std::max(in.positive, in.negative);
}

std::vector<double> AugmentedOddEigs(int n, int p) {
  Require(n >= 3 && n % 2 == 1, "n must be odd and at least 3");
  Require(p >= 0, "p must be non-negative");
  std::vector<double> out;
  for (int i = 1; i <= n / 2 + p; ++i)
    out.push_back(4 * std::cos((2 * i - 1) * std::numbers::pi / (n + 2 * p)));
  return out;
}

std::vector<std::vector<double>> AugmentedOddEigvecs(int n, int p) {
  Require(n >= 3 && n % 2 == 1, "n must be odd and at least 3");
  Require(p >= 0, "p must be non-negative");
  const int d = n / 2 + p;
  std::vector<std::vector<double>> out(d, std::vector<double>(d));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      out[i - 1][j - 1] = std::cos((2 * i - 1) * (2 * j - 1) * std::numbers::pi /
                                   (2.0 * (n + 2 * p)));
  return out;
}

VertexPartition AugmentedPartition(int n, int p) {
  Require(n >= 3, "n must be at least 3");
  Require(p >= 0, "p must be non-negative");
  const int top = n / 2;  // largest cyclic distance
  std::vector<std::vector<int>> classes(top + p);
  const auto vertices = AugmentedVertices(n, p);
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
    const auto& a = vertices[v];
    if (a.layer == 0) {
      const int gap = a.j - a.i;
      const int d = std::min(gap, n - gap);
      classes[top - d].push_back(v);
    } else {
      classes[top + a.layer - 1].push_back(v);
    }
  }
  return VertexPartition::FromClasses(n * (n - 1) / 2 + p * n, std::move(classes));
}

QuotientMatrix AugmentedQuotient(int n, int p) {
  Require(n >= 3, "n must be at least 3");
  Require(p >= 0, "p must be non-negative");
  const int d = n / 2 + p;
  QuotientMatrix q;
  q.dimension = d;
  q.entries.assign(static_cast<std::size_t>(d) * d, 0.0);
  q.class_sizes.assign(d, n);
  for (int i = 0; i + 1 < d; ++i) {
    q.at(i, i + 1) = 2;
    q.at(i + 1, i) = 2;
  }
  if (n % 2 == 1) {
    q.at(0, 0) = 2;
  } else {
    q.class_sizes[0] = n / 2;
    q.at(0, 1) = 4;
  }
  return q;
}

double PhiEval(int r, double x) {
  Require(r >= 2, "r must be at least 2");
  double prev = x * x - 8;       // phi_2
  if (r == 2) return prev;
  double cur = x * x * x - 12 * x;  // phi_3
  for (int i = 4; i <= r; ++i) {
    const double next = x * cur - 4 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double PhiMaxRoot(int r) {
  Require(r >= 2, "r must be at least 2");
  double lower = 0;  // phi_2(0) < 0
  double root = 0;
  for (int s = 2; s <= r; ++s) {
    double lo = lower;
    double hi = 4;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (PhiEval(s, mid) > 0 ? hi : lo) = mid;
    }
    root = 0.5 * (lo + hi);
    lower = root;
  }
  return root;
}

MonotonicityReport Monotonicity(int n) {
  Require(n >= 3 && n % 2 == 1, "n must be odd and at least 3");
  MonotonicityReport report;
  report.n = n;
  report.all_monotone = true;
  const int kmax = (n + 1) / 2;
  for (int r = 0; r < n; ++r) {
    if (std::abs(std::cos(r * std::numbers::pi / n)) < 1e-12) {
      Fail(ErrorKind::kPropertyViolation, "lambda(r, .) vanishes identically");
    }
    MonotonicityRow row;
    row.r = r;
    std::vector<double> values;
    const double sign = r % 2 == 0 ? -1.0 : 1.0;
    for (int k = 1; k <= kmax; ++k)
      values.push_back(4 * sign * std::cos(r * std::numbers::pi / n) *
                       std::cos(2 * k * std::numbers::pi / (n + 2)));
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
      up = up && values[i] > values[i - 1];
      down = down && values[i] < values[i - 1];
    }
    row.monotone = up || down;
    row.direction = up ? 1 : (down ? -1 : 0);
    for (double v : values) (v > 0 ? row.positive : row.negative) += 1;
    report.positive += row.positive;
    report.negative += row.negative;
    report.all_monotone = report.all_monotone && row.monotone;
    report.rows.push_back(row);
  }
  return report;
}

bool SpectrumContains(const Spectrum& s, double value, double tol) {
  const auto& ev = s.eigenvalues();
  auto it = std::lower_bound(ev.begin(), ev.end(), value - tol);
  return it != ev.end() && *it <= value + tol;
}

bool MultisetEqual(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace supertoken
