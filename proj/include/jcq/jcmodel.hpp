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

#include "jcq/cmatrix.hpp"

namespace jcq {

// One Jaynes-Cummings site, hbar = 1. All frequencies share one unit.
struct JCParams {
  double omega0 = 1.0;  // atomic transition
  double omega = 1.0;   // cavity mode
  double g = 0.1;       // atom-cavity coupling

  double detuning() const { return omega - omega0; }
  // Throws std::invalid_argument unless g, omega0, omega > 0.
  void validate() const;
};

JCParams resonant(double frequency, double g);

// Dressed pair of the n-excitation manifold:
//   |psi+> = c|e,n-1> + s|g,n>,  |psi-> = -s|e,n-1> + c|g,n>
// with cos(theta) = detuning / delta and energies
//   lambda+- = n omega + (detuning +- delta) / 2.
struct DressedData {
  int n = 1;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double G = 0.0;  // 2 g sqrt(n)
  double theta = 0.0;
  double c = 0.0;
  double s = 0.0;
  double delta = 0.0;  // lambda+ - lambda- = sqrt(detuning^2 + G^2)
};

// Throws std::invalid_argument for n < 1.
DressedData dressed_data(const JCParams& params, int n);

// H = omega0/2 sigma_z + g (a^dag sigma_- + sigma_+ a) + omega a^dag a on
// {e, g} (x) {0..n_max}, index = atom * (n_max + 1) + photons.
CMatrix site_hamiltonian(const JCParams& params, int n_max);

// H_Aa (x) I + I (x) H_Bb on (A, a, B, b).
CMatrix total_hamiltonian(const JCParams& site_a, const JCParams& site_b,
                          int n_max);

// Total excitation operator (atoms excited + photons) on the lattice.
CMatrix excitation_number(int n_max);

enum class TransformDirection { bare_to_dressed, dressed_to_bare };

// Row r holds the expansion of input basis state r in the output basis.
// Bare order (|e,n-1>, |g,n>); dressed order (|psi+>, |psi->).
using Transform2 = std::array<std::array<double, 2>, 2>;
Transform2 bare_dressed_transform(const DressedData& d,
                                  TransformDirection direction);

}  // namespace jcq
