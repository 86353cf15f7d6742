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

#include "jcq/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "jcq/error.hpp"
#include "jcq/kernels.hpp"

namespace jcq {

bool is_cavity(Subsystem s) {
  return s == Subsystem::CavityA || s == Subsystem::CavityB;
}

char subsystem_symbol(Subsystem s) {
  switch (s) {
    case Subsystem::AtomA: return 'A';
    case Subsystem::CavityA: return 'a';
    case Subsystem::AtomB: return 'B';
    case Subsystem::CavityB: return 'b';
  }
  return '?';
}

std::string_view pair_name(PairLabel p) {
  switch (p) {
    case PairLabel::AB: return "AB";
    case PairLabel::ab: return "ab";
    case PairLabel::Aa: return "Aa";
    case PairLabel::Bb: return "Bb";
    case PairLabel::Ab: return "Ab";
    case PairLabel::Ba: return "Ba";
  }
  return "?";
}

PairLabel parse_pair(std::string_view name) {
  for (PairLabel p : kAllPairs)
    if (pair_name(p) == name) return p;
  throw std::invalid_argument("unknown pair '" + std::string(name) + "'");
}

std::pair<Subsystem, Subsystem> pair_subsystems(PairLabel p) {
  switch (p) {
    case PairLabel::AB: return {Subsystem::AtomA, Subsystem::AtomB};
    case PairLabel::ab: return {Subsystem::CavityA, Subsystem::CavityB};
    case PairLabel::Aa: return {Subsystem::AtomA, Subsystem::CavityA};
    case PairLabel::Bb: return {Subsystem::AtomB, Subsystem::CavityB};
    case PairLabel::Ab: return {Subsystem::AtomA, Subsystem::CavityB};
    case PairLabel::Ba: return {Subsystem::AtomB, Subsystem::CavityA};
  }
  throw std::invalid_argument("bad pair label");
}

bool is_local_pair(PairLabel p) {
  return p == PairLabel::Aa || p == PairLabel::Bb;
}

FourPartiteState::FourPartiteState(int n_max, double time)
    : n_max_(n_max), time_(time) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  amplitudes_.assign(4 * cavity_dim() * cavity_dim(), 0.0);
}

FourPartiteState::FourPartiteState(int n_max, std::vector<cplx> amplitudes,
                                   double time)
    : n_max_(n_max), amplitudes_(std::move(amplitudes)), time_(time) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (amplitudes_.size() != 4 * cavity_dim() * cavity_dim())
    throw DimensionError("amplitude count " +
                         std::to_string(amplitudes_.size()) +
                         " does not match n_max " + std::to_string(n_max));
}

std::size_t FourPartiteState::index(int atom_a, int photons_a, int atom_b,
                                    int photons_b) const {
  const std::size_t nc = cavity_dim();
  return ((static_cast<std::size_t>(atom_a) * nc + photons_a) * 2 + atom_b) *
             nc +
         photons_b;
}

double FourPartiteState::norm() const {
  return std::sqrt(
      kernels::active().norm2(amplitudes_.data(), amplitudes_.size()));
}

double fidelity(const FourPartiteState& a, const FourPartiteState& b) {
  if (a.size() != b.size()) throw DimensionError("fidelity: size mismatch");
  cplx overlap = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    overlap += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
  return std::abs(overlap);
}

}  // namespace jcq
