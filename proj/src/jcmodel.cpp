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

#include "jcq/jcmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "jcq/qla.hpp"

namespace jcq {

void JCParams::validate() const {
  if (!(g > 0.0)) throw std::invalid_argument("coupling g must be positive");
  if (!(omega0 > 0.0))
    throw std::invalid_argument("atomic frequency omega0 must be positive");
  if (!(omega > 0.0))
    throw std::invalid_argument("cavity frequency omega must be positive");
}

JCParams resonant(double frequency, double g) {
  return JCParams{frequency, frequency, g};
}

DressedData dressed_data(const JCParams& params, int n) {
  params.validate();
  if (n < 1)
    throw std::invalid_argument(
        "dressed_data: n must be >= 1; the ground manifold is |g,0> alone");
  const double det = params.detuning();
  DressedData d;
  d.n = n;
  d.G = 2.0 * params.g * std::sqrt(static_cast<double>(n));
  d.delta = std::hypot(det, d.G);
  d.theta = std::atan2(d.G, det);
  d.c = std::cos(0.5 * d.theta);
  d.s = std::sin(0.5 * d.theta);
  d.lambda_plus = n * params.omega + 0.5 * (det + d.delta);
  d.lambda_minus = n * params.omega + 0.5 * (det - d.delta);
  return d;
}

CMatrix site_hamiltonian(const JCParams& params, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const std::size_t nc = static_cast<std::size_t>(n_max) + 1;
  auto at = [nc](int atom, int photons) {
    return static_cast<std::size_t>(atom) * nc + photons;
  };
  constexpr int e = 0;
  constexpr int gr = 1;
  CMatrix h(2 * nc, 2 * nc);
  for (int n = 0; n <= n_max; ++n) {
    h(at(e, n), at(e, n)) = 0.5 * params.omega0 + n * params.omega;
    h(at(gr, n), at(gr, n)) = -0.5 * params.omega0 + n * params.omega;
  }
  // sigma_+ a |g,n> = sqrt(n) |e,n-1>
  for (int n = 1; n <= n_max; ++n) {
    const double x = params.g * std::sqrt(static_cast<double>(n));
    h(at(e, n - 1), at(gr, n)) = x;
    h(at(gr, n), at(e, n - 1)) = x;
  }
  return h;
}

CMatrix total_hamiltonian(const JCParams& site_a, const JCParams& site_b,
                          int n_max) {
  const CMatrix ha = site_hamiltonian(site_a, n_max);
  const CMatrix hb = site_hamiltonian(site_b, n_max);
  const CMatrix id = CMatrix::identity(ha.rows());
  return kron(ha, id) + kron(id, hb);
}

CMatrix excitation_number(int n_max) {
  const std::size_t nc = static_cast<std::size_t>(n_max) + 1;
  std::vector<double> site(2 * nc);
  for (std::size_t atom = 0; atom < 2; ++atom)
    for (std::size_t n = 0; n < nc; ++n)
      site[atom * nc + n] = (atom == 0 ? 1.0 : 0.0) + static_cast<double>(n);
  const CMatrix ns = CMatrix::diagonal(site);
  const CMatrix id = CMatrix::identity(2 * nc);
  return kron(ns, id) + kron(id, ns);
}

Transform2 bare_dressed_transform(const DressedData& d,
                                  TransformDirection direction) {
  if (direction == TransformDirection::bare_to_dressed) {
    // |e,n-1> = c|psi+> - s|psi->,  |g,n> = s|psi+> + c|psi->
    return {{{d.c, -d.s}, {d.s, d.c}}};
  }
  // |psi+> = c|e,n-1> + s|g,n>,  |psi-> = -s|e,n-1> + c|g,n>
  return {{{d.c, d.s}, {-d.s, d.c}}};
}

}  // namespace jcq
