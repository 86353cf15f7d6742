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
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "jcq/cmatrix.hpp"

namespace jcq {

// Tensor factors of the lattice, in storage order.
enum class Subsystem { AtomA = 0, CavityA = 1, AtomB = 2, CavityB = 3 };

bool is_cavity(Subsystem s);
char subsystem_symbol(Subsystem s);

// The six unordered pairs of the lattice. Aa and Bb are local to a site.
enum class PairLabel { AB = 0, ab, Aa, Bb, Ab, Ba };

inline constexpr std::array<PairLabel, 6> kAllPairs = {
    PairLabel::AB, PairLabel::ab, PairLabel::Aa,
    PairLabel::Bb, PairLabel::Ab, PairLabel::Ba};

std::string_view pair_name(PairLabel p);
PairLabel parse_pair(std::string_view name);
std::pair<Subsystem, Subsystem> pair_subsystems(PairLabel p);
bool is_local_pair(PairLabel p);

// Pure state on A (x) a (x) B (x) b. Atoms store (e, g) at indices (0, 1);
// cavities store Fock numbers 0..n_max directly.
class FourPartiteState {
 public:
  FourPartiteState() = default;
  explicit FourPartiteState(int n_max, double time = 0.0);
  FourPartiteState(int n_max, std::vector<cplx> amplitudes, double time);

  int n_max() const { return n_max_; }
  std::size_t cavity_dim() const { return static_cast<std::size_t>(n_max_) + 1; }
  std::size_t size() const { return amplitudes_.size(); }
  std::array<std::size_t, 4> dims() const {
    return {2, cavity_dim(), 2, cavity_dim()};
  }

  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  // atom indices: 0 = e, 1 = g; photon numbers are Fock indices.
  std::size_t index(int atom_a, int photons_a, int atom_b, int photons_b) const;
  cplx& at(int atom_a, int photons_a, int atom_b, int photons_b) {
    return amplitudes_[index(atom_a, photons_a, atom_b, photons_b)];
  }
  cplx at(int atom_a, int photons_a, int atom_b, int photons_b) const {
    return amplitudes_[index(atom_a, photons_a, atom_b, photons_b)];
  }

  std::span<const cplx> amplitudes() const { return amplitudes_; }
  std::span<cplx> amplitudes() { return amplitudes_; }

  double norm() const;

 private:
  int n_max_ = 1;
  std::vector<cplx> amplitudes_;
  double time_ = 0.0;
};

// |<a|b>|, the global-phase-insensitive overlap.
double fidelity(const FourPartiteState& a, const FourPartiteState& b);

// Two-qubit reduced state of one pair. Qubit index 0 is the excited atom or
// the one-photon cavity, index 1 the ground atom or the vacuum; the pair index
// is 2 * first + second in the order the pair was requested.
struct PairDensity {
  CMatrix rho;
};

}  // namespace jcq
