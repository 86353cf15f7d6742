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

#include <string_view>
#include <vector>

#include "jcq/cmatrix.hpp"
#include "jcq/jcmodel.hpp"
#include "jcq/qla.hpp"
#include "jcq/state.hpp"

namespace jcq {

enum class Family { Phi, Psi };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

// Phi: cos(alpha)|e,0,e,0> + sin(alpha)|g,0,g,0>
// Psi: cos(alpha)|e,0,g,0> + sin(alpha)|g,0,e,0>
struct InitialFamily {
  Family kind = Family::Phi;
  double alpha = 0.0;
};

FourPartiteState prepare_initial(const InitialFamily& family, int n_max = 1);

// Dressed-state route: expand each site in its n = 1 dressed pair, attach
// exp(-i lambda+- t), and return to the bare basis. Both sites share `params`;
// |g,0> carries zero energy. The result is embedded with the requested n_max.
FourPartiteState evolve_analytic(const InitialFamily& family,
                                 const JCParams& params, double t,
                                 int n_max = 1);

// Exact propagator V exp(-i Lambda t) V^dagger for a fixed Hamiltonian. Build
// once, evolve at many times.
class NumericPropagator {
 public:
  explicit NumericPropagator(const CMatrix& hamiltonian);

  std::size_t dim() const { return energies_.size(); }
  const std::vector<double>& energies() const { return energies_; }

  // Advances the state by a duration t. Throws DimensionError when the state
  // does not match the Hamiltonian.
  FourPartiteState evolve(const FourPartiteState& state0, double t) const;

 private:
  std::vector<double> energies_;
  CMatrix vectors_;
};

FourPartiteState evolve_numeric(const FourPartiteState& state0,
                                const CMatrix& hamiltonian, double t);

// Probability outside the excitation sectors present at `reference`.
double excitation_leakage(const FourPartiteState& reference,
                          const FourPartiteState& state);

}  // namespace jcq
