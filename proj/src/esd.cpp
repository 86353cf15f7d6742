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

#include "jcq/esd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jcq/closedform.hpp"
#include "jcq/error.hpp"

namespace jcq {

std::string_view zero_kind_name(ZeroKind k) {
  switch (k) {
    case ZeroKind::sudden_death: return "sudden_death";
    case ZeroKind::touch: return "touch";
    case ZeroKind::identically_zero: return "identically_zero";
  }
  return "?";
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::closed_form: return "closed";
    case Engine::analytic: return "analytic";
    case Engine::numeric: return "numeric";
  }
  return "?";
}

ZeroScanOptions default_scan_options(double G, double t_lo, double t_hi) {
  const double period = 2.0 * std::numbers::pi / G;
  ZeroScanOptions o;
  o.samples = std::max<std::size_t>(
      16, static_cast<std::size_t>(std::ceil(512.0 * (t_hi - t_lo) / period)));
  o.min_width = 1e-6 * period;
  return o;
}

namespace {

struct Scanner {
  const CurveFn& curve;
  const ZeroScanOptions& opt;
  bool has_q = true;

  CurveSample eval(double t) const {
    CurveSample s = curve(t);
    if (!std::isfinite(s.C) || (s.q && !std::isfinite(*s.q)))
      throw Error("zero_intervals: non-finite concurrence sample at t = " +
                  std::to_string(t));
    return s;
  }

  // Sample classification: strictly negative Q beyond round-off.
  bool dead_sample(const CurveSample& s) const {
    if (has_q) return *s.q < -0.5 * opt.tol;
    return s.C <= opt.tol;
  }

  // Pointwise classification used while polishing endpoints.
  bool dead_at(double t) const {
    const CurveSample s = eval(t);
    if (has_q) return *s.q < 0.0;
    return s.C <= opt.tol;
  }

  // Boundary between a live point and a dead point.
  double bisect(double live, double dead) const {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (live + dead);
      if (mid == live || mid == dead) break;
      (dead_at(mid) ? dead : live) = mid;
    }
    return 0.5 * (live + dead);
  }

  // Signed value driving the search: Q when available (informative where C
  // is clamped to zero), else C.
  double level(double t) const {
    const CurveSample s = eval(t);
    return has_q ? *s.q : s.C;
  }

  // Golden-section minimum of level() on [a, b].
  double minimize(double a, double b) const {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = level(x1);
    double f2 = level(x2);
    for (int it = 0; it < 200 && x1 < x2; ++it) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = level(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = level(x2);
      }
    }
    return f1 <= f2 ? x1 : x2;
  }

  // Edge of the set {C <= tol} around the zero point `inside`, searched
  // towards `outside`.
  double zero_edge(double inside, double outside) const {
    if (eval(outside).C <= opt.tol) return outside;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (inside + outside);
      if (mid == inside || mid == outside) break;
      (eval(mid).C <= opt.tol ? inside : outside) = mid;
    }
    return 0.5 * (inside + outside);
  }

  ZeroInterval classify(double lo, double hi) const {
    return {lo, hi,
            hi - lo > opt.min_width ? ZeroKind::sudden_death : ZeroKind::touch};
  }
};

}  // namespace

std::vector<ZeroInterval> zero_intervals(const CurveFn& curve, double t_lo,
                                         double t_hi,
                                         const ZeroScanOptions& options) {
  if (!(t_hi > t_lo))
    throw std::invalid_argument("zero_intervals: empty time window");
  if (options.samples < 2)
    throw std::invalid_argument("zero_intervals: need at least two samples");

  Scanner sc{curve, options};
  const std::size_t n = options.samples;
  std::vector<double> ts(n + 1);
  std::vector<CurveSample> vs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = t_lo + (t_hi - t_lo) * static_cast<double>(i) / n;
    vs[i] = sc.eval(ts[i]);
    sc.has_q = sc.has_q && vs[i].q.has_value();
  }

  if (std::all_of(vs.begin(), vs.end(),
                  [&](const CurveSample& s) { return s.C <= options.tol; }))
    return {{t_lo, t_hi, ZeroKind::identically_zero}};

  std::vector<bool> dead(n + 1);
  for (std::size_t i = 0; i <= n; ++i) dead[i] = sc.dead_sample(vs[i]);

  std::vector<ZeroInterval> found;
  for (std::size_t i = 0; i <= n;) {
    if (!dead[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 <= n && dead[j + 1]) ++j;
    const double lo = i == 0 ? t_lo : sc.bisect(ts[i - 1], ts[i]);
    const double hi = j == n ? t_hi : sc.bisect(ts[j + 1], ts[j]);
    found.push_back(sc.classify(lo, hi));
    i = j + 1;
  }

  // Zeros between samples: refine every live local minimum.
  auto level = [&](std::size_t i) { return sc.has_q ? *vs[i].q : vs[i].C; };
  for (std::size_t i = 0; i <= n; ++i) {
    if (dead[i]) continue;
    const bool left_ok = i == 0 || (!dead[i - 1] && level(i) <= level(i - 1));
    const bool right_ok = i == n || (!dead[i + 1] && level(i) <= level(i + 1));
    if (!left_ok || !right_ok) continue;
    const double a = ts[i == 0 ? 0 : i - 1];
    const double b = ts[i == n ? n : i + 1];
    double t_min = sc.minimize(a, b);
    if (level(i) <= sc.level(t_min)) t_min = ts[i];
    const CurveSample at_min = sc.eval(t_min);
    if (at_min.C > options.tol) continue;
    if (sc.has_q && sc.dead_sample(at_min)) {
      const double lo = t_min == a ? a : sc.bisect(a, t_min);
      const double hi = t_min == b ? b : sc.bisect(b, t_min);
      found.push_back(sc.classify(lo, hi));
    } else {
      // Flat (higher-order) roots leave the minimizer anywhere inside the
      // round-off plateau; report its centre.
      const double left = sc.zero_edge(t_min, a);
      const double right = sc.zero_edge(t_min, b);
      double root = 0.5 * (left + right);
      if (i == 0 && left == a) root = t_lo;  // plateau cut by the window
      if (i == n && right == b) root = t_hi;
      found.push_back({root, root, ZeroKind::touch});
    }
  }

  std::sort(found.begin(), found.end(),
            [](const ZeroInterval& x, const ZeroInterval& y) {
              return x.t_lo < y.t_lo;
            });
  // Neighbouring samples can refine onto the same root, and a dead run can
  // be split where Q grazes zero from below while C stays at zero.
  const double merge_gap = 0.5 * (t_hi - t_lo) / n;
  auto joined = [&](const ZeroInterval& last, const ZeroInterval& z) {
    if (z.t_lo <= last.t_hi) return true;
    if (z.t_lo - last.t_hi > merge_gap) return false;
    if (z.kind == ZeroKind::touch && last.kind == ZeroKind::touch) return true;
    return sc.eval(0.5 * (last.t_hi + z.t_lo)).C <= options.tol;
  };
  std::vector<ZeroInterval> out;
  for (const ZeroInterval& z : found) {
    if (out.empty() || !joined(out.back(), z)) {
      out.push_back(z);
      continue;
    }
    ZeroInterval& last = out.back();
    if (z.kind == ZeroKind::touch && last.kind == ZeroKind::touch) continue;
    if (last.kind == ZeroKind::touch) {
      last = z;
    } else if (z.kind != ZeroKind::touch) {
      last = sc.classify(last.t_lo, std::max(last.t_hi, z.t_hi));
    }
  }
  return out;
}

std::optional<std::pair<double, double>> esd_boundary_phi_AB(double alpha) {
  constexpr double pi = std::numbers::pi;
  if (!(alpha > 0.0 && alpha < 0.5 * pi))
    throw std::invalid_argument(
        "esd_boundary_phi_AB: alpha must lie in (0, pi/2)");
  if (alpha >= 0.25 * pi) return std::nullopt;
  const double onset = 2.0 * std::asin(std::sqrt(std::tan(alpha)));
  return std::pair{onset, 2.0 * pi - onset};
}

PairEvaluator::PairEvaluator(Family family, const JCParams& params,
                             Engine engine, int n_max)
    : family_(family),
      params_(params),
      engine_(engine),
      n_max_(n_max),
      G_(2.0 * params.g) {
  params.validate();
  if (engine == Engine::closed_form &&
      std::abs(params.detuning()) > 1e-12 * std::max(params.omega, 1.0))
    throw std::invalid_argument(
        "closed-form engine requires resonance (omega == omega0)");
  if (engine == Engine::numeric)
    propagator_.emplace(total_hamiltonian(params, params, n_max));
}

PairTable PairEvaluator::evaluate(double alpha, double t) const {
  const InitialFamily init{family_, alpha};
  switch (engine_) {
    case Engine::closed_form: {
      const closed_form::Values v = closed_form::resonance(family_, alpha, G_, t);
      PairTable table;
      for (PairLabel p : kAllPairs) {
        ConcurrenceResult& r = table[static_cast<int>(p)];
        r.C = v.c(p);
        r.q_corner = v.q(p);
        r.q_inner = v.q(p);
      }
      return table;
    }
    case Engine::analytic:
      return all_pairwise(evolve_analytic(init, params_, t, n_max_));
    case Engine::numeric:
      return all_pairwise(
          propagator_->evolve(prepare_initial(init, n_max_), t));
  }
  throw std::logic_error("unhandled engine");
}

CurveFn PairEvaluator::curve(double alpha, PairLabel pair) const {
  return [this, alpha, pair](double t) {
    CurveSample s;
    if (engine_ == Engine::closed_form) {
      const auto v = closed_form::resonance(family_, alpha, G_, t);
      s.C = v.c(pair);
      s.q = v.q(pair);
      return s;
    }
    const InitialFamily init{family_, alpha};
    const FourPartiteState st =
        engine_ == Engine::analytic
            ? evolve_analytic(init, params_, t, n_max_)
            : propagator_->evolve(prepare_initial(init, n_max_), t);
    const ConcurrenceResult r = wootters_concurrence(partial_trace(st, pair));
    s.C = r.C;
    s.q = r.q();
    return s;
  };
}

namespace {

void check_grid(const std::vector<double>& grid, const char* name) {
  if (grid.empty())
    throw std::invalid_argument(std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]))
      throw std::invalid_argument(std::string(name) + " grid is not finite");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument(std::string(name) +
                                  " grid is not strictly increasing");
  }
}

}  // namespace

SweepTable sweep_table(Family family, const std::vector<double>& alpha_grid,
                       const std::vector<double>& t_grid,
                       const JCParams& params, Engine engine, int n_max) {
  check_grid(alpha_grid, "alpha");
  check_grid(t_grid, "time");
  const PairEvaluator eval(family, params, engine, n_max);
  SweepTable table{alpha_grid, t_grid, {}};
  table.cells.reserve(alpha_grid.size() * t_grid.size());
  for (double alpha : alpha_grid)
    for (double t : t_grid) table.cells.push_back(eval.evaluate(alpha, t));
  return table;
}

EsdMap esd_map(const SweepTable& table, Family family, PairLabel pair,
               double G, double tol) {
  EsdMap m;
  m.pair = pair;
  m.alpha_grid = table.alpha_grid;
  m.t_grid = table.t_grid;
  m.zero_mask.reserve(table.cells.size());
  for (const PairTable& cell : table.cells)
    m.zero_mask.push_back(at(cell, pair).C <= tol);
  if (family == Family::Phi && pair == PairLabel::AB) {
    for (double alpha : table.alpha_grid) {
      std::optional<std::pair<double, double>> b;
      if (alpha > 0.0 && alpha < 0.5 * std::numbers::pi)
        if (auto gt = esd_boundary_phi_AB(alpha))
          b = std::pair{gt->first / G, gt->second / G};
      m.boundary.push_back(b);
    }
  }
  return m;
}

SweepResult sweep(Family family, PairLabel pair,
                  const std::vector<double>& alpha_grid,
                  const std::vector<double>& t_grid, const JCParams& params,
                  Engine engine, double tol) {
  SweepResult r;
  r.table = sweep_table(family, alpha_grid, t_grid, params, engine);
  r.map = esd_map(r.table, family, pair, 2.0 * params.g, tol);
  return r;
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points == 0) throw std::invalid_argument("linspace: zero points");
  if (points == 1) return {lo};
  std::vector<double> v(points);
  for (std::size_t i = 0; i < points; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  v.back() = hi;
  return v;
}

}  // namespace jcq
