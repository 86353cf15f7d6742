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

#include <optional>
#include <vector>

#include "jcq/cmatrix.hpp"
#include "jcq/state.hpp"

namespace jcq {

inline constexpr double kHermitianTol = 1e-12;

// Eigenvalues sorted non-increasing; when present, column k of `vectors`
// belongs to values[k].
struct Spectrum {
  std::vector<double> values;
  std::optional<CMatrix> vectors;
};

// Entry [(i1, i2), (j1, j2)] = A[i1, j1] * B[i2, j2].
CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix pauli_y();

// Throws NonHermitianError when the asymmetry exceeds `tol`.
Spectrum eig_hermitian(const CMatrix& m, bool with_vectors = true,
                       double tol = kHermitianTol);

// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to zero and
// anything below -tol throws NotPsdError. Eigenvalues at or below `floor` are
// also dropped, which keeps round-off in a null space from entering the root
// at the scale of its square root.
CMatrix sqrt_psd(const CMatrix& m, double tol = 1e-12, double floor = 0.0);

// Cavity probability outside {0, 1} photons that partial_trace tolerates.
inline constexpr double kLeakageTol = 1e-10;

// Reduces the lattice state to the pair `keep`, first subsystem as the high
// qubit. Cavities are projected onto {|1>, |0>}; throws LeakageError when the
// kept cavities carry more than kLeakageTol outside that span.
PairDensity partial_trace(const FourPartiteState& state, Subsystem first,
                          Subsystem second);
PairDensity partial_trace(const FourPartiteState& state, PairLabel keep);

}  // namespace jcq
