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

#include "jcq/dynamics.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "jcq/error.hpp"
#include "jcq/kernels.hpp"

namespace jcq {

std::string_view family_name(Family f) {
  return f == Family::Phi ? "phi" : "psi";
}

Family parse_family(std::string_view name) {
  if (name == "phi" || name == "Phi") return Family::Phi;
  if (name == "psi" || name == "Psi") return Family::Psi;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

namespace {

constexpr int kE = 0;
constexpr int kG = 1;

// Bare amplitudes (|e,0>, |g,1>) of a site that started in |e,0>.
struct SiteAmplitudes {
  cplx excited;
  cplx photon;
};

SiteAmplitudes evolve_excited_site(const DressedData& d, double t) {
  using Dir = TransformDirection;
  const Transform2 to_dressed = bare_dressed_transform(d, Dir::bare_to_dressed);
  const Transform2 to_bare = bare_dressed_transform(d, Dir::dressed_to_bare);
  const cplx i(0.0, 1.0);
  const std::array<cplx, 2> dressed = {
      to_dressed[0][0] * std::exp(-i * d.lambda_plus * t),
      to_dressed[0][1] * std::exp(-i * d.lambda_minus * t)};
  return {dressed[0] * to_bare[0][0] + dressed[1] * to_bare[1][0],
          dressed[0] * to_bare[0][1] + dressed[1] * to_bare[1][1]};
}

}  // namespace

FourPartiteState prepare_initial(const InitialFamily& family, int n_max) {
  FourPartiteState s(n_max, 0.0);
  const double ca = std::cos(family.alpha);
  const double sa = std::sin(family.alpha);
  if (family.kind == Family::Phi) {
    s.at(kE, 0, kE, 0) = ca;
    s.at(kG, 0, kG, 0) = sa;
  } else {
    s.at(kE, 0, kG, 0) = ca;
    s.at(kG, 0, kE, 0) = sa;
  }
  return s;
}

FourPartiteState evolve_analytic(const InitialFamily& family,
                                 const JCParams& params, double t, int n_max) {
  const DressedData d = dressed_data(params, 1);
  const SiteAmplitudes x = evolve_excited_site(d, t);
  const double ca = std::cos(family.alpha);
  const double sa = std::sin(family.alpha);

  FourPartiteState s(n_max, t);
  // Site basis states reachable from |e,0> and |g,0>.
  const std::array<std::pair<int, int>, 2> excited = {{{kE, 0}, {kG, 1}}};
  const std::array<cplx, 2> excited_amp = {x.excited, x.photon};

  if (family.kind == Family::Phi) {
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q)
        s.at(excited[p].first, excited[p].second, excited[q].first,
             excited[q].second) = ca * excited_amp[p] * excited_amp[q];
    s.at(kG, 0, kG, 0) += sa;
  } else {
    for (int p = 0; p < 2; ++p) {
      s.at(excited[p].first, excited[p].second, kG, 0) += ca * excited_amp[p];
      s.at(kG, 0, excited[p].first, excited[p].second) += sa * excited_amp[p];
    }
  }
  return s;
}

NumericPropagator::NumericPropagator(const CMatrix& hamiltonian) {
  Spectrum s = eig_hermitian(hamiltonian);
  energies_ = std::move(s.values);
  vectors_ = std::move(*s.vectors);
}

FourPartiteState NumericPropagator::evolve(const FourPartiteState& state0,
                                           double t) const {
  const std::size_t n = dim();
  if (state0.size() != n)
    throw DimensionError("evolve: state dimension " +
                         std::to_string(state0.size()) +
                         " does not match Hamiltonian dimension " +
                         std::to_string(n));
  const auto& k = kernels::active();
  std::vector<cplx> coeff(n);
  k.matvec_adjoint(vectors_.data().data(), n, n, state0.amplitudes().data(),
                   coeff.data());
  std::vector<cplx> phase(n);
  for (std::size_t j = 0; j < n; ++j)
    phase[j] = std::polar(1.0, -energies_[j] * t);
  k.hadamard(coeff.data(), phase.data(), coeff.data(), n);
  std::vector<cplx> out(n);
  k.matvec(vectors_.data().data(), n, n, coeff.data(), out.data());
  return FourPartiteState(state0.n_max(), std::move(out), state0.time() + t);
}

FourPartiteState evolve_numeric(const FourPartiteState& state0,
                                const CMatrix& hamiltonian, double t) {
  if (!hamiltonian.square() || hamiltonian.rows() != state0.size())
    throw DimensionError("evolve_numeric: Hamiltonian is " +
                         std::to_string(hamiltonian.rows()) + "x" +
                         std::to_string(hamiltonian.cols()) + ", state has " +
                         std::to_string(state0.size()) + " amplitudes");
  return NumericPropagator(hamiltonian).evolve(state0, t);
}

double excitation_leakage(const FourPartiteState& reference,
                          const FourPartiteState& state) {
  if (reference.size() != state.size())
    throw DimensionError("excitation_leakage: size mismatch");
  const auto dims = state.dims();
  auto excitations = [&](std::size_t flat) {
    std::size_t rem = flat;
    int total = 0;
    for (int k = 3; k >= 0; --k) {
      const int v = static_cast<int>(rem % dims[k]);
      rem /= dims[k];
      total += (k % 2 == 0) ? (v == 0 ? 1 : 0) : v;
    }
    return total;
  };
  std::set<int> sectors;
  for (std::size_t f = 0; f < reference.size(); ++f)
    if (std::norm(reference.amplitudes()[f]) > 0.0)
      sectors.insert(excitations(f));
  double leaked = 0.0;
  for (std::size_t f = 0; f < state.size(); ++f)
    if (!sectors.contains(excitations(f)))
      leaked += std::norm(state.amplitudes()[f]);
  return leaked;
}

}  // namespace jcq
