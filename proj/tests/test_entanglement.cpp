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
#include "jcq/qla.hpp"
#include "test_util.hpp"

using namespace jcq;

namespace {

constexpr double pi = std::numbers::pi;

CMatrix pure(const std::array<cplx, 4>& v) {
  CMatrix rho(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho(i, j) = v[i] * std::conj(v[j]);
  return rho;
}

CMatrix x_matrix(double a, double b, double c, double d, cplx z, cplx w) {
  CMatrix rho(4, 4);
  rho(0, 0) = a;
  rho(1, 1) = b;
  rho(2, 2) = c;
  rho(3, 3) = d;
  rho(0, 3) = z;
  rho(3, 0) = std::conj(z);
  rho(1, 2) = w;
  rho(2, 1) = std::conj(w);
  return rho;
}

// Concurrence of a pure two-qubit state, 2|ad - bc| for amplitudes (a,b,c,d).
double pure_concurrence(const std::array<cplx, 4>& v) {
  return 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
}

}  // namespace

TEST_CASE("Wootters concurrence of pure states") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(wootters_concurrence({pure({r, 0.0, 0.0, r})}).C ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters_concurrence({pure({0.0, r, cplx(0.0, r), 0.0})}).C ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Product states a (x) b.
  for (int trial = 0; trial < 100; ++trial) {
    cplx a0 = jcq::testing::random_cplx(), a1 = jcq::testing::random_cplx();
    cplx b0 = jcq::testing::random_cplx(), b1 = jcq::testing::random_cplx();
    const double na = std::sqrt(std::norm(a0) + std::norm(a1));
    const double nb = std::sqrt(std::norm(b0) + std::norm(b1));
    a0 /= na, a1 /= na, b0 /= nb, b1 /= nb;
    CHECK(wootters_concurrence({pure({a0 * b0, a0 * b1, a1 * b0, a1 * b1})}).C <=
          1e-10);
  }

  // Random pure states against the amplitude formula.
  for (int trial = 0; trial < 200; ++trial) {
    std::array<cplx, 4> v;
    double n = 0.0;
    for (auto& x : v) {
      x = jcq::testing::random_cplx();
      n += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(n);
    CHECK(std::abs(wootters_concurrence({pure(v)}).C - pure_concurrence(v)) <=
          1e-10);
  }
}

TEST_CASE("X-state concurrence examples") {
  const CMatrix rho = x_matrix(0.3, 0.2, 0.2, 0.3, 0.25, 0.0);
  const ConcurrenceResult fast = xstate_concurrence({rho});
  const ConcurrenceResult full = wootters_concurrence({rho});
  CHECK(fast.C == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(full.C == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(*fast.q_corner == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(*fast.q_inner == doctest::Approx(-0.3).epsilon(1e-14));
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(fast.lambdas[k] - full.lambdas[k]) <= 1e-12);

  const cplx z = std::polar(0.2, 0.7);
  const CMatrix corner = x_matrix(0.5, 0.0, 0.0, 0.5, z, 0.0);
  CHECK(xstate_concurrence({corner}).C == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(wootters_concurrence({corner}).C == doctest::Approx(0.4).epsilon(1e-12));

  // Inner coherence with empty corners.
  const CMatrix inner = x_matrix(0.0, 0.6, 0.4, 0.0, 0.0, cplx(0.0, -0.3));
  CHECK(xstate_concurrence({inner}).C == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(*xstate_concurrence({inner}).q() == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("X-state fast path agrees with Wootters on random X states") {
  for (int trial = 0; trial < 1000; ++trial) {
    const CMatrix rho = jcq::testing::random_x_state();
    const ConcurrenceResult fast = xstate_concurrence({rho});
    const ConcurrenceResult full = wootters_concurrence({rho});
    CHECK(std::abs(fast.C - full.C) <= 1e-10);
    REQUIRE(full.has_x_diagnostics());
    CHECK(*full.q_corner == *fast.q_corner);
  }
}

TEST_CASE("resonant Phi example at alpha = pi/4, Gt = pi/2") {
  const JCParams p = resonant(5.0, 1.0);
  const double t = (pi / 2) / (2.0 * p.g);
  const FourPartiteState s = evolve_analytic({Family::Phi, pi / 4}, p, t);
  const ConcurrenceResult r = xstate_concurrence(partial_trace(s, PairLabel::AB));
  CHECK(*r.q() == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(r.C == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(wootters_concurrence(partial_trace(s, PairLabel::AB)).C ==
        doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("density validation names the violated property") {
  using P = InvalidDensityError::Property;
  auto property_of = [](const CMatrix& m) {
    try {
      wootters_concurrence({m});
    } catch (const InvalidDensityError& e) {
      return e.property();
    }
    FAIL("no rejection");
    return P::shape;
  };
  CMatrix half = CMatrix::identity(4);
  half *= 0.5;
  CHECK(property_of(half) == P::trace);

  CMatrix skew = x_matrix(0.25, 0.25, 0.25, 0.25, 0.1, 0.0);
  skew(3, 0) = 0.0;
  CHECK(property_of(skew) == P::hermiticity);

  CHECK(property_of(x_matrix(0.5, 0.0, 0.0, 0.5, 0.6, 0.0)) == P::positivity);
  CHECK(property_of(CMatrix::identity(2)) == P::shape);
}

TEST_CASE("X-state fast path rejects non-X input") {
  CMatrix rho = x_matrix(0.4, 0.1, 0.1, 0.4, 0.2, 0.0);
  rho(0, 1) = 1e-3;
  rho(1, 0) = 1e-3;
  try {
    xstate_concurrence({rho});
    FAIL("no rejection");
  } catch (const NotXFormError& e) {
    CHECK(e.magnitude() == doctest::Approx(1e-3));
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
  }
  CHECK_FALSE(is_x_form(rho));
  CHECK(is_x_form(x_matrix(0.4, 0.1, 0.1, 0.4, 0.2, 0.0)));
  // Wootters still handles it, without X diagnostics.
  const ConcurrenceResult r = wootters_concurrence({rho});
  CHECK_FALSE(r.has_x_diagnostics());
  CHECK_FALSE(r.q().has_value());
}

TEST_CASE("Wootters on general random densities") {
  for (std::size_t rank : {1u, 2u, 3u, 4u})
    for (int trial = 0; trial < 50; ++trial) {
      const ConcurrenceResult r =
          wootters_concurrence({jcq::testing::random_density(4, rank)});
      CHECK(r.C >= 0.0);
      CHECK(r.C <= 1.0 + 1e-12);
      for (int k = 0; k < 3; ++k) CHECK(r.lambdas[k] >= r.lambdas[k + 1]);
      CHECK(r.lambdas[3] >= 0.0);
    }
}

TEST_CASE("all_pairwise at t = 0") {
  for (double alpha : {0.0, 0.2, pi / 4, 1.0, pi / 2}) {
    const PairTable t = all_pairwise(prepare_initial({Family::Phi, alpha}));
    CHECK(std::abs(at(t, PairLabel::AB).C - std::abs(std::sin(2 * alpha))) <= 1e-10);
    for (PairLabel p : kAllPairs)
      if (p != PairLabel::AB) CHECK(at(t, p).C <= 1e-12);
  }
}

TEST_CASE("all_pairwise at resonance") {
  const JCParams p = resonant(5.0, 0.5);
  const double G = 2.0 * p.g;
  for (double alpha : {0.2, pi / 4, 1.1}) {
    const PairTable t = all_pairwise(evolve_analytic({Family::Phi, alpha}, p, pi / G));
    CHECK(std::abs(at(t, PairLabel::ab).C - std::abs(std::sin(2 * alpha))) <= 1e-10);
    // Closed form at Gt = pi: Q^AB = cos^2(a) cos^2(pi/2)(...) = 0.
    CHECK(at(t, PairLabel::AB).C <= 1e-10);
  }
  const PairTable t =
      all_pairwise(evolve_analytic({Family::Psi, pi / 4}, p, (pi / 2) / G));
  CHECK(at(t, PairLabel::Aa).C == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(at(t, PairLabel::Bb).C == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("pairwise invariants along trajectories") {
  const JCParams params[] = {resonant(5.0, 1.0), JCParams{5.0, 5.7, 0.4}};
  for (const JCParams& p : params) {
    const NumericPropagator prop(total_hamiltonian(p, p, 1));
    for (Family f : {Family::Phi, Family::Psi})
      for (double alpha : {0.1, 0.5, pi / 4, 1.3}) {
        const FourPartiteState s0 = prepare_initial({f, alpha});
        for (int k = 0; k <= 40; ++k) {
          const FourPartiteState s = prop.evolve(s0, 0.17 * k);
          const PairTable table = all_pairwise(s);
          CHECK(std::abs(at(table, PairLabel::Ba).C - at(table, PairLabel::Ab).C) <=
                1e-12);
          if (f == Family::Phi)
            CHECK(std::abs(at(table, PairLabel::Aa).C -
                           at(table, PairLabel::Bb).C) <= 1e-12);
          for (PairLabel pl : kAllPairs) {
            const PairDensity rho = partial_trace(s, pl);
            const ConcurrenceResult& r = at(table, pl);
            CHECK(is_x_form(rho.rho));
            CHECK(r.C >= 0.0);
            CHECK(r.C <= 1.0 + 1e-12);
            CHECK(std::abs(xstate_concurrence(rho).C - r.C) <= 1e-10);
          }
        }
      }
  }
}
