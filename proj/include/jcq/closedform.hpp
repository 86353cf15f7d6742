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

#pragma once

#include <array>

#include "jcq/dynamics.hpp"
#include "jcq/jcmodel.hpp"
#include "jcq/state.hpp"

// Resonant closed forms for the six pairwise concurrences and their signed Q
// values, plus the detuned |z|, b, c ingredients.
//
// Q values are signed. C = 2 max(0, Q) for every pair. The factor tan(alpha)
// appearing in the textbook forms is carried as |sin(alpha) cos(alpha)| so
// the formulas stay finite at alpha = pi/2 and hold for any real alpha.
namespace jcq::closed_form {

struct Values {
  std::array<double, 6> C{};
  std::array<double, 6> Q{};

  double c(PairLabel p) const { return C[static_cast<int>(p)]; }
  double q(PairLabel p) const { return Q[static_cast<int>(p)]; }
};

Values phi_resonance(double alpha, double G, double t);
Values psi_resonance(double alpha, double G, double t);
Values resonance(Family family, double alpha, double G, double t);

// Coherence magnitude and the two opposing populations whose geometric mean
// is subtracted from it.
struct Ingredients {
  double z_abs = 0.0;
  double b = 0.0;
  double c = 0.0;

  double q() const;
};

struct PairIngredients {
  Ingredients AB;
  Ingredients Ab;
};

// Phi family. AB: z = rho[0][3], b = rho[1][1], c = rho[2][2].
// Ab: z = rho[0][3], b = rho[1][1], c = rho[2][2].
PairIngredients phi_offres_ingredients(double alpha, const DressedData& d,
                                       double t);
// Psi family. AB: z = rho[1][2], b = rho[3][3], c = rho[0][0].
// Ab: z = rho[1][2], b = rho[3][3], c = rho[0][0].
PairIngredients psi_offres_ingredients(double alpha, const DressedData& d,
                                       double t);

// Q^AB + Q^ab + 2 Q^Aa |tan(alpha)| - 2 Q^Ab on the signed resonant values.
double q_identity_lhs(Family family, double alpha, double G, double t);

}  // namespace jcq::closed_form
