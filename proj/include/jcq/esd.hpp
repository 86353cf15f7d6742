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

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "jcq/dynamics.hpp"
#include "jcq/entanglement.hpp"
#include "jcq/jcmodel.hpp"

namespace jcq {

enum class ZeroKind { sudden_death, touch, identically_zero };

std::string_view zero_kind_name(ZeroKind k);

struct ZeroInterval {
  double t_lo = 0.0;
  double t_hi = 0.0;
  ZeroKind kind = ZeroKind::touch;
};

// One evaluation of a concurrence curve. `q` is the signed Q when known;
// C = 2 max(0, q) is then assumed.
struct CurveSample {
  double C = 0.0;
  std::optional<double> q;
};

using CurveFn = std::function<CurveSample(double t)>;

struct ZeroScanOptions {
  std::size_t samples = 1024;  // intervals across the window
  double tol = 1e-12;          // C at or below this counts as zero
  double min_width = 0.0;      // wider zero sets are sudden death
};

// 512 samples per Rabi period 2 pi / G and min_width 1e-6 of a period.
ZeroScanOptions default_scan_options(double G, double t_lo, double t_hi);

// Maximal zero sets of the curve on [t_lo, t_hi], sorted and disjoint.
// Endpoints are polished by bisection on the sign of q (on C <= tol without
// it); isolated roots between samples are found by golden-section search on
// local minima. A curve that is zero at every sample is reported as one
// identically_zero interval. Throws jcq::Error on non-finite samples.
std::vector<ZeroInterval> zero_intervals(const CurveFn& curve, double t_lo,
                                         double t_hi,
                                         const ZeroScanOptions& options);

// Sudden-death window of the resonant Phi / AB curve in units of Gt:
// (2 asin sqrt(tan alpha), 2 pi - 2 asin sqrt(tan alpha)) for alpha < pi/4,
// none for pi/4 <= alpha < pi/2. Throws std::invalid_argument outside
// (0, pi/2).
std::optional<std::pair<double, double>> esd_boundary_phi_AB(double alpha);

enum class Engine { closed_form, analytic, numeric };

std::string_view engine_name(Engine e);

// Concurrence table for one family over a time grid at fixed alpha. The
// closed-form engine requires resonance.
class PairEvaluator {
 public:
  PairEvaluator(Family family, const JCParams& params, Engine engine,
                int n_max = 1);

  PairTable evaluate(double alpha, double t) const;
  CurveFn curve(double alpha, PairLabel pair) const;

  // Rabi coupling of the single-excitation manifold, 2 g.
  double G() const { return G_; }
  Engine engine() const { return engine_; }

 private:
  Family family_;
  JCParams params_;
  Engine engine_;
  int n_max_;
  double G_;
  std::optional<NumericPropagator> propagator_;
};

struct SweepTable {
  std::vector<double> alpha_grid;
  std::vector<double> t_grid;
  // cells[i * t_grid.size() + j] for alpha_grid[i], t_grid[j].
  std::vector<PairTable> cells;

  const PairTable& cell(std::size_t i, std::size_t j) const {
    return cells[i * t_grid.size() + j];
  }
};

struct EsdMap {
  PairLabel pair = PairLabel::AB;
  std::vector<double> alpha_grid;
  std::vector<double> t_grid;
  std::vector<bool> zero_mask;  // alpha-major, C <= tol
  // Phi / AB only: analytic sudden-death window per alpha, in units of t.
  std::vector<std::optional<std::pair<double, double>>> boundary;

  bool zero(std::size_t i, std::size_t j) const {
    return zero_mask[i * t_grid.size() + j];
  }
};

// Grids must be non-empty and strictly increasing (std::invalid_argument).
SweepTable sweep_table(Family family, const std::vector<double>& alpha_grid,
                       const std::vector<double>& t_grid,
                       const JCParams& params, Engine engine, int n_max = 1);

EsdMap esd_map(const SweepTable& table, Family family, PairLabel pair,
               double G, double tol = 1e-12);

struct SweepResult {
  SweepTable table;
  EsdMap map;
};

SweepResult sweep(Family family, PairLabel pair,
                  const std::vector<double>& alpha_grid,
                  const std::vector<double>& t_grid, const JCParams& params,
                  Engine engine, double tol = 1e-12);

std::vector<double> linspace(double lo, double hi, std::size_t points);

}  // namespace jcq
