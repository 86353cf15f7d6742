// Copyright 2026 The jcq Authors. All Rights Reserved.
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

#include "jcq/qla.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "jcq/error.hpp"

namespace jcq {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

CMatrix from_eigen(const Eigen::MatrixXcd& e) {
  CMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const cplx aij = a(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
    }
  return r;
}

CMatrix pauli_y() {
  using namespace std::complex_literals;
  return CMatrix{{0.0, -1i}, {1i, 0.0}};
}

Spectrum eig_hermitian(const CMatrix& m, bool with_vectors, double tol) {
  if (!m.square()) throw DimensionError("eig_hermitian needs a square matrix");
  const double asym = hermiticity_residual(m);
  if (asym > tol)
    throw NonHermitianError(
        "eig_hermitian: matrix is not Hermitian, max |M - M^dag| = " +
            std::to_string(asym),
        asym);

  // Eigen reads only the lower triangle; symmetrize so both halves count.
  const Eigen::MatrixXcd e = to_eigen(m);
  const Eigen::MatrixXcd h = 0.5 * (e + e.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      h, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("eig_hermitian: eigensolver did not converge");

  // Eigen sorts ascending.
  const auto n = static_cast<Eigen::Index>(m.rows());
  Spectrum s;
  s.values.resize(n);
  for (Eigen::Index k = 0; k < n; ++k)
    s.values[k] = solver.eigenvalues()(n - 1 - k);
  if (with_vectors) {
    Eigen::MatrixXcd v(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
      v.col(k) = solver.eigenvectors().col(n - 1 - k);
    s.vectors = from_eigen(v);
  }
  return s;
}

CMatrix sqrt_psd(const CMatrix& m, double tol, double floor) {
  const Spectrum s = eig_hermitian(m);
  const std::size_t n = m.rows();
  const CMatrix& v = *s.vectors;
  std::vector<double> root(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double mu = s.values[k];
    if (mu < -tol)
      throw NotPsdError("sqrt_psd: eigenvalue " + std::to_string(mu) +
                            " below -tol",
                        mu);
    root[k] = mu > std::max(floor, 0.0) ? std::sqrt(mu) : 0.0;
  }
  CMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        if (root[k] != 0.0) acc += v(i, k) * root[k] * std::conj(v(j, k));
      r(i, j) = acc;
    }
  return r;
}

namespace {

// Maps a stored factor index to its qubit index, or -1 when it lies outside
// the qubit span.
int qubit_index(Subsystem s, int stored) {
  if (!is_cavity(s)) return stored;  // e = 0, g = 1 already
  if (stored == 1) return 0;
  if (stored == 0) return 1;
  return -1;
}

}  // namespace

PairDensity partial_trace(const FourPartiteState& state, Subsystem first,
                          Subsystem second) {
  if (first == second)
    throw std::invalid_argument("partial_trace: pair must name two subsystems");

  const auto dims = state.dims();
  const int f = static_cast<int>(first);
  const int s = static_cast<int>(second);

  // Gather |psi(k1, k2; env)> for each environment index.
  CMatrix rho(4, 4);
  double leaked = 0.0;
  std::array<int, 4> idx{};
  const auto amps = state.amplitudes();
  for (std::size_t flat = 0; flat < amps.size(); ++flat) {
    std::size_t rem = flat;
    for (int k = 3; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % dims[k]);
      rem /= dims[k];
    }
    if (qubit_index(first, idx[f]) < 0 || qubit_index(second, idx[s]) < 0)
      leaked += std::norm(amps[flat]);
  }
  if (leaked > kLeakageTol)
    throw LeakageError("partial_trace: cavity population outside {0,1} is " +
                           std::to_string(leaked),
                       leaked);

  // Environment factors are the two not kept.
  std::array<int, 2> env{};
  {
    int e = 0;
    for (int k = 0; k < 4; ++k)
      if (k != f && k != s) env[e++] = k;
  }
  std::array<int, 4> i4{};
  for (std::size_t e0 = 0; e0 < dims[env[0]]; ++e0)
    for (std::size_t e1 = 0; e1 < dims[env[1]]; ++e1) {
      std::array<cplx, 4> v{};
      for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2) {
          i4[env[0]] = static_cast<int>(e0);
          i4[env[1]] = static_cast<int>(e1);
          // Inverse of qubit_index on {0, 1}.
          i4[f] = is_cavity(first) ? 1 - q1 : q1;
          i4[s] = is_cavity(second) ? 1 - q2 : q2;
          v[2 * q1 + q2] = state.at(i4[0], i4[1], i4[2], i4[3]);
        }
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rho(r, c) += v[r] * std::conj(v[c]);
    }

  const double tr = rho.trace().real();
  if (tr <= 0.0) throw Error("partial_trace: state has zero norm");
  rho *= 1.0 / tr;
  return PairDensity{std::move(rho)};
}

PairDensity partial_trace(const FourPartiteState& state, PairLabel keep) {
  const auto [first, second] = pair_subsystems(keep);
  return partial_trace(state, first, second);
}

}  // namespace jcq
