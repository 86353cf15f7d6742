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
#include <optional>

#include "jcq/qla.hpp"
#include "jcq/state.hpp"

namespace jcq {

inline constexpr double kXFormTol = 1e-10;
inline constexpr double kDensityTol = 1e-10;

// Qubit pair concurrence plus the X-state diagnostics when they apply.
struct ConcurrenceResult {
  double C = 0.0;
  // Eigenvalues of rho (sy x sy) rho* (sy x sy), non-increasing.
  std::array<double, 4> lambdas{};
  // |z| - sqrt(bc), z the corner coherence rho[0][3].
  std::optional<double> q_corner;
  // |w| - sqrt(ad), w the inner coherence rho[1][2].
  std::optional<double> q_inner;
  // |z| >= |w|: the corner block carries the coherence.
  bool corner_dominant = true;

  bool has_x_diagnostics() const { return q_corner && q_inner; }
  // Signed Q of the branch carrying the larger coherence. Its sign decides
  // entanglement: C = 2 max(0, q()) for every X state met in the lattice,
  // where at most one block is coherent.
  std::optional<double> q() const;
};

// Throws InvalidDensityError naming the first violated property.
void validate_density(const CMatrix& rho, double tol = kDensityTol);

// Largest |entry| off the diagonal and anti-diagonal.
double off_x_magnitude(const CMatrix& rho, int* row = nullptr,
                       int* col = nullptr);
bool is_x_form(const CMatrix& rho, double tol = kXFormTol);

ConcurrenceResult wootters_concurrence(const PairDensity& rho);
// Throws NotXFormError when an off-X entry exceeds kXFormTol.
ConcurrenceResult xstate_concurrence(const PairDensity& rho);

using PairTable = std::array<ConcurrenceResult, 6>;

inline const ConcurrenceResult& at(const PairTable& t, PairLabel p) {
  return t[static_cast<int>(p)];
}

PairTable all_pairwise(const FourPartiteState& state);

}  // namespace jcq
