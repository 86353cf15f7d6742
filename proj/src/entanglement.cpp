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

#include "jcq/entanglement.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "jcq/error.hpp"

namespace jcq {

namespace {

bool on_x(int r, int c) { return r == c || r + c == 3; }

// Null-space eigenvalues of rho at round-off level are dropped before the
// square root.
constexpr long double kRootFloor = 1e-14L;

using cplx_ext = std::complex<long double>;
using Matrix4x = Eigen::Matrix<cplx_ext, 4, 4>;

cplx_ext to_ext(cplx z) { return {z.real(), z.imag()}; }

}  // namespace

std::optional<double> ConcurrenceResult::q() const {
  if (!has_x_diagnostics()) return std::nullopt;
  return corner_dominant ? *q_corner : *q_inner;
}

void validate_density(const CMatrix& rho, double tol) {
  using P = InvalidDensityError::Property;
  if (rho.rows() != 4 || rho.cols() != 4)
    throw InvalidDensityError("density matrix must be 4x4", P::shape);
  const double asym = hermiticity_residual(rho);
  if (asym > tol)
    throw InvalidDensityError(
        "density matrix is not Hermitian (residual " + std::to_string(asym) +
            ")",
        P::hermiticity);
  const double tr_err = std::abs(rho.trace() - 1.0);
  if (tr_err > tol)
    throw InvalidDensityError(
        "density matrix trace differs from 1 by " + std::to_string(tr_err),
        P::trace);
  const Spectrum s = eig_hermitian(rho, false, tol);
  if (s.values.back() < -tol)
    throw InvalidDensityError("density matrix has negative eigenvalue " +
                                  std::to_string(s.values.back()),
                              P::positivity);
}

double off_x_magnitude(const CMatrix& rho, int* row, int* col) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (on_x(r, c)) continue;
      const double m = std::abs(rho(r, c));
      if (m > worst) {
        worst = m;
        if (row) *row = r;
        if (col) *col = c;
      }
    }
  return worst;
}

bool is_x_form(const CMatrix& rho, double tol) {
  return off_x_magnitude(rho) <= tol;
}

namespace {

void attach_x_diagnostics(const CMatrix& rho, ConcurrenceResult& r) {
  const double a = std::max(rho(0, 0).real(), 0.0);
  const double b = std::max(rho(1, 1).real(), 0.0);
  const double c = std::max(rho(2, 2).real(), 0.0);
  const double d = std::max(rho(3, 3).real(), 0.0);
  const double z = std::abs(rho(0, 3));
  const double w = std::abs(rho(1, 2));
  r.q_corner = z - std::sqrt(b * c);
  r.q_inner = w - std::sqrt(a * d);
  r.corner_dominant = z >= w;
}

}  // namespace

ConcurrenceResult wootters_concurrence(const PairDensity& pd) {
  const CMatrix& rho = pd.rho;
  validate_density(rho);

  // sqrt(lambda_i) are the singular values of sqrt(rho) Y sqrt(rho)^*, whose
  // Gram matrix is the Hermitized product sqrt(rho) rho~ sqrt(rho). Square
  // roots of small eigenvalues amplify round-off by 1/sqrt(mu), so this runs
  // in extended precision.
  Matrix4x em;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      em(i, j) = 0.5L * (to_ext(rho(i, j)) + std::conj(to_ext(rho(j, i))));
  const Eigen::SelfAdjointEigenSolver<Matrix4x> es(em);
  if (es.info() != Eigen::Success)
    throw Error("wootters_concurrence: eigensolver did not converge");

  Matrix4x root = Matrix4x::Zero();
  for (int k = 0; k < 4; ++k) {
    const long double mu = es.eigenvalues()(k);
    if (mu <= kRootFloor) continue;
    const auto v = es.eigenvectors().col(k);
    root += std::sqrt(mu) * v * v.adjoint();
  }
  Matrix4x yy = Matrix4x::Zero();
  yy(0, 3) = -1.0L;
  yy(1, 2) = 1.0L;
  yy(2, 1) = 1.0L;
  yy(3, 0) = -1.0L;
  const Matrix4x m = root * yy * root.conjugate();
  const auto sv = Eigen::JacobiSVD<Matrix4x>(m).singularValues();

  std::array<long double, 4> roots{};
  for (int k = 0; k < 4; ++k) roots[k] = sv(k);
  std::sort(roots.begin(), roots.end(), std::greater<>());

  ConcurrenceResult r;
  for (int k = 0; k < 4; ++k)
    r.lambdas[k] = static_cast<double>(roots[k] * roots[k]);
  r.C = static_cast<double>(
      std::max(0.0L, roots[0] - roots[1] - roots[2] - roots[3]));
  if (is_x_form(rho)) attach_x_diagnostics(rho, r);
  return r;
}

ConcurrenceResult xstate_concurrence(const PairDensity& pd) {
  const CMatrix& rho = pd.rho;
  if (rho.rows() != 4 || rho.cols() != 4)
    throw InvalidDensityError("density matrix must be 4x4",
                              InvalidDensityError::Property::shape);
  int row = -1;
  int col = -1;
  const double off = off_x_magnitude(rho, &row, &col);
  if (off > kXFormTol)
    throw NotXFormError("xstate_concurrence: entry (" + std::to_string(row) +
                            "," + std::to_string(col) + ") has magnitude " +
                            std::to_string(off),
                        off, row, col);

  ConcurrenceResult r;
  attach_x_diagnostics(rho, r);
  r.C = 2.0 * std::max({0.0, *r.q_corner, *r.q_inner});

  const double a = std::max(rho(0, 0).real(), 0.0);
  const double b = std::max(rho(1, 1).real(), 0.0);
  const double c = std::max(rho(2, 2).real(), 0.0);
  const double d = std::max(rho(3, 3).real(), 0.0);
  const double z = std::abs(rho(0, 3));
  const double w = std::abs(rho(1, 2));
  const double rad = std::sqrt(a * d);
  const double rbc = std::sqrt(b * c);
  r.lambdas = {(rad + z) * (rad + z), (rad - z) * (rad - z),
               (rbc + w) * (rbc + w), (rbc - w) * (rbc - w)};
  std::sort(r.lambdas.begin(), r.lambdas.end(), std::greater<>());
  return r;
}

PairTable all_pairwise(const FourPartiteState& state) {
  PairTable table;
  for (PairLabel p : kAllPairs)
    table[static_cast<int>(p)] = wootters_concurrence(partial_trace(state, p));
  return table;
}

}  // namespace jcq
