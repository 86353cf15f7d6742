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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "jcq/dynamics.hpp"
#include "jcq/entanglement.hpp"
#include "jcq/error.hpp"
#include "jcq/jcmodel.hpp"
#include "test_util.hpp"

using namespace jcq;

namespace {

constexpr double pi = std::numbers::pi;

double max_abs_modulus_diff(const FourPartiteState& a,
                            const FourPartiteState& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::abs(std::abs(a.amplitudes()[k]) -
                                     std::abs(b.amplitudes()[k])));
  return worst;
}

double max_concurrence_diff(const FourPartiteState& a,
                            const FourPartiteState& b) {
  const PairTable ta = all_pairwise(a);
  const PairTable tb = all_pairwise(b);
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(ta[k].C - tb[k].C));
  return worst;
}

}  // namespace

TEST_CASE("prepare_initial") {
  const FourPartiteState phi0 = prepare_initial({Family::Phi, 0.0});
  CHECK(phi0.at(0, 0, 0, 0) == cplx(1.0));
  CHECK(phi0.norm() == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t k = 1; k < phi0.size(); ++k)
    CHECK(phi0.amplitudes()[k] == cplx(0.0));

  const FourPartiteState bell = prepare_initial({Family::Phi, pi / 4});
  CHECK(all_pairwise(bell)[0].C == doctest::Approx(1.0).epsilon(1e-12));

  const FourPartiteState psi = prepare_initial({Family::Psi, pi / 3});
  CHECK(psi.at(0, 0, 1, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(psi.at(1, 0, 0, 0).real() ==
        doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(psi.time() == 0.0);

  CHECK(prepare_initial({Family::Psi, 0.4}, 3).size() == 64);
}

TEST_CASE("analytic evolution at t = 0 is the initial state") {
  for (Family f : {Family::Phi, Family::Psi})
    for (double alpha : {0.0, 0.3, pi / 4, 1.2}) {
      const FourPartiteState a =
          evolve_analytic({f, alpha}, JCParams{5.0, 6.0, 0.5}, 0.0);
      const FourPartiteState b = prepare_initial({f, alpha});
      for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(std::abs(a.amplitudes()[k] - b.amplitudes()[k]) <= 1e-15);
    }
}

TEST_CASE("analytic evolution at resonance swaps excitations at t = pi/G") {
  const JCParams p = resonant(5.0, 0.7);
  const double G = 2.0 * p.g;
  const double alpha = 0.9;
  const FourPartiteState s = evolve_analytic({Family::Phi, alpha}, p, pi / G);
  CHECK(std::abs(s.at(0, 0, 0, 0)) <= 1e-14);
  CHECK(std::abs(s.at(1, 1, 1, 1)) ==
        doctest::Approx(std::cos(alpha)).epsilon(1e-14));
  CHECK(std::abs(s.at(1, 0, 1, 0)) ==
        doctest::Approx(std::sin(alpha)).epsilon(1e-14));
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("analytic and numeric engines agree at resonance up to global phase") {
  const JCParams p = resonant(5.0, 1.0);
  const CMatrix h = total_hamiltonian(p, p, 1);
  for (Family f : {Family::Phi, Family::Psi})
    for (double alpha : {0.1, pi / 4, 1.3})
      for (double t : {0.0, 0.37, 1.9, 5.2}) {
        const FourPartiteState a = evolve_analytic({f, alpha}, p, t);
        const FourPartiteState n = evolve_numeric(prepare_initial({f, alpha}), h, t);
        CHECK(fidelity(a, n) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(n.time() == t);
      }
}

TEST_CASE("analytic and numeric engines agree off resonance") {
  // Amplitude moduli and every concurrence agree; raw phases follow different
  // conventions for the sign of the detuning.
  for (const JCParams& p :
       {JCParams{5.0, 6.0, 0.5}, JCParams{5.0, 4.3, 0.8}, JCParams{2.0, 2.1, 0.05}}) {
    const CMatrix h = total_hamiltonian(p, p, 1);
    for (Family f : {Family::Phi, Family::Psi})
      for (double alpha : {0.2, 0.7, pi / 4})
        for (double t : {0.5, 3.3, 11.0}) {
          const FourPartiteState a = evolve_analytic({f, alpha}, p, t);
          const FourPartiteState n =
              evolve_numeric(prepare_initial({f, alpha}), h, t);
          CHECK(max_abs_modulus_diff(a, n) <= 1e-10);
          CHECK(max_concurrence_diff(a, n) <= 1e-10);
        }
  }
}

TEST_CASE("numeric evolution at resonance, alpha = pi/4, Gt = pi") {
  const JCParams p = resonant(5.0, 1.0);
  const double t = pi / (2.0 * p.g);
  for (Family f : {Family::Phi, Family::Psi}) {
    const FourPartiteState n = evolve_numeric(prepare_initial({f, pi / 4}),
                                              total_hamiltonian(p, p, 1), t);
    CHECK(max_concurrence_diff(n, evolve_analytic({f, pi / 4}, p, t)) <= 1e-10);
  }
}

TEST_CASE("numeric evolution basics") {
  const JCParams pa{5.0, 5.4, 0.6};
  const JCParams pb{5.0, 4.9, 0.3};
  const CMatrix h = total_hamiltonian(pa, pb, 1);
  const FourPartiteState s0 = jcq::testing::random_state(1);

  const FourPartiteState same = evolve_numeric(s0, h, 0.0);
  for (std::size_t k = 0; k < s0.size(); ++k)
    CHECK(std::abs(same.amplitudes()[k] - s0.amplitudes()[k]) <= 1e-14);

  const NumericPropagator prop(h);
  const FourPartiteState two_step = prop.evolve(prop.evolve(s0, 0.8), 1.7);
  const FourPartiteState one_step = prop.evolve(s0, 2.5);
  CHECK(two_step.time() == doctest::Approx(2.5));
  for (std::size_t k = 0; k < s0.size(); ++k)
    CHECK(std::abs(two_step.amplitudes()[k] - one_step.amplitudes()[k]) <= 1e-11);

  for (double t : {0.1, 3.0, 40.0, 300.0})
    CHECK(std::abs(prop.evolve(s0, t).norm() - 1.0) <= 1e-12);

  CHECK_THROWS_AS(evolve_numeric(prepare_initial({Family::Phi, 0.3}, 2), h, 1.0),
                  DimensionError);
  CHECK_THROWS_AS(prop.evolve(prepare_initial({Family::Phi, 0.3}, 2), 1.0),
                  DimensionError);
}

TEST_CASE("numeric evolution conserves the excitation sector") {
  for (int n_max : {1, 2, 3}) {
    const JCParams p{5.0, 5.3, 0.4};
    const CMatrix h = total_hamiltonian(p, p, n_max);
    for (Family f : {Family::Phi, Family::Psi}) {
      const FourPartiteState s0 = prepare_initial({f, 0.6}, n_max);
      for (double t : {0.3, 7.0, 55.0}) {
        const FourPartiteState s = evolve_numeric(s0, h, t);
        CHECK(excitation_leakage(s0, s) <= 1e-12);
        CHECK(std::abs(s.norm() - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("numeric engine with larger Fock cutoff reproduces concurrences") {
  const JCParams p{5.0, 5.2, 0.5};
  for (Family f : {Family::Phi, Family::Psi})
    for (double t : {0.4, 2.2, 6.1}) {
      const FourPartiteState s1 = evolve_numeric(
          prepare_initial({f, 0.5}, 1), total_hamiltonian(p, p, 1), t);
      const FourPartiteState s3 = evolve_numeric(
          prepare_initial({f, 0.5}, 3), total_hamiltonian(p, p, 3), t);
      const PairTable a = all_pairwise(s1);
      const PairTable b = all_pairwise(s3);
      for (int k = 0; k < 6; ++k) CHECK(std::abs(a[k].C - b[k].C) <= 1e-10);
    }
}

TEST_CASE("concurrences are periodic in the Rabi period at resonance") {
  const JCParams p = resonant(5.0, 0.8);
  const double G = 2.0 * p.g;
  const NumericPropagator prop(total_hamiltonian(p, p, 1));
  for (Family f : {Family::Phi, Family::Psi}) {
    const FourPartiteState s0 = prepare_initial({f, 0.45});
    for (double t : {0.0, 0.6, 2.9}) {
      const PairTable a = all_pairwise(prop.evolve(s0, t));
      const PairTable b = all_pairwise(prop.evolve(s0, t + 2.0 * pi / G));
      for (int k = 0; k < 6; ++k) CHECK(std::abs(a[k].C - b[k].C) <= 1e-10);
    }
  }
}

TEST_CASE("half-period shift exchanges atom-atom and cavity-cavity entanglement") {
  const JCParams p = resonant(5.0, 0.8);
  const double G = 2.0 * p.g;
  const NumericPropagator prop(total_hamiltonian(p, p, 1));
  for (Family f : {Family::Phi, Family::Psi})
    for (double alpha : {0.3, pi / 4, 1.1}) {
      const FourPartiteState s0 = prepare_initial({f, alpha});
      for (double t : {0.0, 0.7, 3.4}) {
        const PairTable now = all_pairwise(prop.evolve(s0, t));
        const PairTable later = all_pairwise(prop.evolve(s0, t + pi / G));
        CHECK(std::abs(at(later, PairLabel::ab).C - at(now, PairLabel::AB).C) <=
              1e-10);
      }
    }
}

TEST_CASE("excitation_leakage detects population outside the sector") {
  const FourPartiteState s0 = prepare_initial({Family::Phi, 0.0}, 2);
  FourPartiteState s = s0;
  s.at(0, 0, 0, 0) = std::sqrt(0.75);
  s.at(0, 1, 0, 0) = std::sqrt(0.25);  // three excitations
  CHECK(excitation_leakage(s0, s) == doctest::Approx(0.25).epsilon(1e-15));
}
