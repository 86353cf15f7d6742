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
#include <limits>
#include <numbers>

#include "doctest.h"
#include "jcq/closedform.hpp"
#include "jcq/error.hpp"
#include "jcq/esd.hpp"

using namespace jcq;
namespace cf = jcq::closed_form;

namespace {

constexpr double pi = std::numbers::pi;

// Resonant lattice with G = 1 so that Gt = t.
const JCParams kUnitG = resonant(5.0, 0.5);

std::vector<ZeroInterval> scan(Family f, double alpha, PairLabel pair,
                               Engine engine, double gt_max = 4 * pi) {
  const PairEvaluator eval(f, kUnitG, engine);
  return zero_intervals(eval.curve(alpha, pair), 0.0, gt_max,
                        default_scan_options(eval.G(), 0.0, gt_max));
}

std::size_t count_kind(const std::vector<ZeroInterval>& zs, ZeroKind k) {
  return std::count_if(zs.begin(), zs.end(),
                       [k](const ZeroInterval& z) { return z.kind == k; });
}

// Root of tan(alpha) = sin^2(x/2) on [lo, hi] by plain bisection.
double bisect_onset(double alpha, double lo, double hi) {
  auto f = [alpha](double x) {
    return std::tan(alpha) - std::pow(std::sin(0.5 * x), 2);
  };
  const bool lo_positive = f(lo) > 0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    ((f(mid) > 0) == lo_positive ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("Phi atom-atom curve above pi/4 only touches zero") {
  for (double alpha : {pi / 3, pi / 4}) {
    for (Engine e : {Engine::closed_form, Engine::analytic, Engine::numeric}) {
      const auto zs = scan(Family::Phi, alpha, PairLabel::AB, e);
      REQUIRE(zs.size() == 2);
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(zs[k].kind == ZeroKind::touch);
        CHECK(zs[k].t_lo == doctest::Approx((2 * k + 1) * pi).epsilon(1e-6));
        CHECK(zs[k].t_hi - zs[k].t_lo <= 1e-6);
      }
    }
  }
}

TEST_CASE("Phi atom-atom curve at pi/8 dies once per period") {
  const double onset = bisect_onset(pi / 8, 0.0, pi);
  const double revival = bisect_onset(pi / 8, pi, 2 * pi);
  // Loosely consistent with the rounded reference pair (1.3986, 4.8846).
  CHECK(std::abs(onset - 1.398626) <= 5e-4);
  CHECK(std::abs(revival - 4.884559) <= 5e-4);
  CHECK(std::abs(onset + revival - 2 * pi) <= 1e-12);

  const auto boundary = esd_boundary_phi_AB(pi / 8);
  REQUIRE(boundary.has_value());
  CHECK(std::abs(boundary->first - onset) <= 1e-12);
  CHECK(std::abs(boundary->second - revival) <= 1e-12);

  for (Engine e : {Engine::closed_form, Engine::analytic, Engine::numeric}) {
    const auto zs = scan(Family::Phi, pi / 8, PairLabel::AB, e);
    REQUIRE(zs.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(zs[k].kind == ZeroKind::sudden_death);
      CHECK(std::abs(zs[k].t_lo - (onset + 2 * pi * k)) <= 1e-6);
      CHECK(std::abs(zs[k].t_hi - (revival + 2 * pi * k)) <= 1e-6);
    }
  }
}

TEST_CASE("detected endpoints follow the analytic boundary below pi/4") {
  for (int k = 1; k <= 10; ++k) {
    const double alpha = (pi / 4) * k / 11.0;
    const auto b = esd_boundary_phi_AB(alpha);
    REQUIRE(b.has_value());
    const auto zs = scan(Family::Phi, alpha, PairLabel::AB, Engine::closed_form,
                         2 * pi);
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].kind == ZeroKind::sudden_death);
    CHECK(std::abs(zs[0].t_lo - b->first) <= 1e-6);
    CHECK(std::abs(zs[0].t_hi - b->second) <= 1e-6);
  }
}

TEST_CASE("esd_boundary_phi_AB edge cases") {
  const auto near = esd_boundary_phi_AB(pi / 4 - 1e-12);
  REQUIRE(near.has_value());
  CHECK(near->first == doctest::Approx(pi).epsilon(1e-5));
  CHECK(near->second == doctest::Approx(pi).epsilon(1e-5));
  CHECK_FALSE(esd_boundary_phi_AB(pi / 4).has_value());
  CHECK_FALSE(esd_boundary_phi_AB(pi / 3).has_value());
  CHECK_FALSE(esd_boundary_phi_AB(1.5).has_value());
  CHECK_THROWS_AS(esd_boundary_phi_AB(0.0), std::invalid_argument);
  CHECK_THROWS_AS(esd_boundary_phi_AB(pi / 2), std::invalid_argument);
  CHECK_THROWS_AS(esd_boundary_phi_AB(-0.3), std::invalid_argument);
}

TEST_CASE("Psi curves never show sudden death") {
  for (int i = 1; i < 20; ++i) {
    const double alpha = (pi / 2) * i / 20.0;
    for (PairLabel p : kAllPairs) {
      const auto zs = scan(Family::Psi, alpha, p, Engine::closed_form);
      CHECK(count_kind(zs, ZeroKind::sudden_death) == 0);
    }
  }
  for (PairLabel p : kAllPairs) {
    const auto zs = scan(Family::Psi, pi / 8, p, Engine::numeric);
    CHECK(count_kind(zs, ZeroKind::sudden_death) == 0);
  }
}

TEST_CASE("product initial states give identically zero curves") {
  const auto zs = scan(Family::Phi, 0.0, PairLabel::AB, Engine::closed_form);
  REQUIRE(zs.size() == 1);
  CHECK(zs[0].kind == ZeroKind::identically_zero);
  CHECK(zs[0].t_lo == 0.0);
  CHECK(zs[0].t_hi == 4 * pi);
  const auto psi = scan(Family::Psi, 0.0, PairLabel::Bb, Engine::numeric);
  REQUIRE(psi.size() == 1);
  CHECK(psi[0].kind == ZeroKind::identically_zero);
}

TEST_CASE("zero_intervals on synthetic curves") {
  ZeroScanOptions opt;
  opt.samples = 100;
  opt.min_width = 1e-6;

  // Dead on [1, 2], live elsewhere, no Q available.
  const CurveFn plateau = [](double t) {
    return CurveSample{std::max(0.0, std::abs(t - 1.5) - 0.5), std::nullopt};
  };
  auto zs = zero_intervals(plateau, 0.0, 3.0, opt);
  REQUIRE(zs.size() == 1);
  CHECK(zs[0].kind == ZeroKind::sudden_death);
  CHECK(zs[0].t_lo == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(zs[0].t_hi == doctest::Approx(2.0).epsilon(1e-12));

  // Touch between samples, found by the minimum search.
  const CurveFn touch = [](double t) {
    const double q = (t - 0.987654) * (t - 0.987654);
    return CurveSample{2 * q, q};
  };
  zs = zero_intervals(touch, 0.0, 3.0, opt);
  REQUIRE(zs.size() == 1);
  CHECK(zs[0].kind == ZeroKind::touch);
  CHECK(zs[0].t_lo == doctest::Approx(0.987654).epsilon(1e-6));

  // Narrow dead window that no sample hits.
  const CurveFn narrow = [](double t) {
    const double q = std::abs(t - 1.2345) - 1e-4;
    return CurveSample{2 * std::max(0.0, q), q};
  };
  zs = zero_intervals(narrow, 0.0, 3.0, opt);
  REQUIRE(zs.size() == 1);
  CHECK(zs[0].kind == ZeroKind::sudden_death);
  CHECK(zs[0].t_lo == doctest::Approx(1.2345 - 1e-4).epsilon(1e-12));
  CHECK(zs[0].t_hi == doctest::Approx(1.2345 + 1e-4).epsilon(1e-12));

  // Intervals reaching the window edges.
  const CurveFn edges = [](double t) {
    const double q = std::sin(t);
    return CurveSample{2 * std::max(0.0, q), q};
  };
  zs = zero_intervals(edges, -1.0, 4.0, opt);
  REQUIRE(zs.size() == 2);
  CHECK(zs[0].t_lo == -1.0);
  CHECK(std::abs(zs[0].t_hi) <= 1e-12);
  CHECK(zs[1].t_lo == doctest::Approx(pi).epsilon(1e-12));
  CHECK(zs[1].t_hi == 4.0);
  for (const auto& z : zs) CHECK(z.kind == ZeroKind::sudden_death);
}

TEST_CASE("zero_intervals rejects bad input") {
  ZeroScanOptions opt;
  const CurveFn nan_curve = [](double t) {
    return CurveSample{t > 1.0 ? std::numeric_limits<double>::quiet_NaN() : 0.5,
                       std::nullopt};
  };
  CHECK_THROWS_AS(zero_intervals(nan_curve, 0.0, 2.0, opt), Error);
  const CurveFn ok = [](double) { return CurveSample{0.5, 0.25}; };
  CHECK_THROWS_AS(zero_intervals(ok, 1.0, 1.0, opt), std::invalid_argument);
  opt.samples = 1;
  CHECK_THROWS_AS(zero_intervals(ok, 0.0, 1.0, opt), std::invalid_argument);
  CHECK(zero_intervals(ok, 0.0, 1.0, ZeroScanOptions{}).empty());
}

TEST_CASE("default scan options") {
  const ZeroScanOptions o = default_scan_options(2.0, 0.0, 2 * pi);
  CHECK(o.samples == 1024);
  CHECK(o.min_width == doctest::Approx(1e-6 * pi));
  CHECK(o.tol == 1e-12);
}

TEST_CASE("sweep on a degenerate 2x2 grid") {
  const SweepResult r = sweep(Family::Phi, PairLabel::AB, {0.0, pi / 4},
                              {0.0, pi}, kUnitG, Engine::numeric);
  CHECK(std::abs(at(r.table.cell(0, 0), PairLabel::AB).C) <= 1e-12);
  CHECK(std::abs(at(r.table.cell(0, 1), PairLabel::AB).C) <= 1e-12);
  CHECK(at(r.table.cell(1, 0), PairLabel::AB).C == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(at(r.table.cell(1, 1), PairLabel::AB).C) <= 1e-9);
  CHECK(r.map.zero(0, 0));
  CHECK_FALSE(r.map.zero(1, 0));
  REQUIRE(r.map.boundary.size() == 2);
  CHECK_FALSE(r.map.boundary[0].has_value());  // alpha = 0
  CHECK_FALSE(r.map.boundary[1].has_value());  // alpha = pi/4

  CHECK_THROWS_AS(sweep(Family::Phi, PairLabel::AB, {}, {0.0}, kUnitG,
                        Engine::numeric),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep(Family::Phi, PairLabel::AB, {0.2, 0.1}, {0.0}, kUnitG,
                        Engine::numeric),
                  std::invalid_argument);
  CHECK_THROWS_AS(PairEvaluator(Family::Phi, JCParams{5.0, 6.0, 0.5},
                                Engine::closed_form),
                  std::invalid_argument);
}

TEST_CASE("sweep boundary is reported in time units") {
  const JCParams p = resonant(5.0, 1.0);  // G = 2
  const SweepResult r = sweep(Family::Phi, PairLabel::AB, {pi / 8}, {0.0, 1.0},
                              p, Engine::closed_form);
  REQUIRE(r.map.boundary[0].has_value());
  const double onset = 2 * std::asin(std::sqrt(std::tan(pi / 8)));
  CHECK(r.map.boundary[0]->first == doctest::Approx(onset / 2).epsilon(1e-12));
  CHECK(r.map.boundary[0]->second ==
        doctest::Approx((2 * pi - onset) / 2).epsilon(1e-12));
  const SweepResult psi = sweep(Family::Psi, PairLabel::AB, {pi / 8}, {0.0},
                                p, Engine::closed_form);
  CHECK(psi.map.boundary.empty());
}

TEST_CASE("Phi atom-cavity map has dead cells exactly where 2|tan a| < |sin Gt|") {
  const auto alphas = linspace(0.0, pi / 2, 41);
  const auto times = linspace(0.0, 4 * pi, 81);
  const SweepResult r = sweep(Family::Phi, PairLabel::Ab, alphas, times, kUnitG,
                              Engine::closed_form);
  bool any_dead = false;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = 0; j < times.size(); ++j) {
      const double margin =
          2 * std::abs(std::tan(alphas[i])) - std::abs(std::sin(times[j]));
      const bool zero_factor = std::abs(std::sin(times[j])) < 1e-12 ||
                               std::cos(alphas[i]) < 1e-12;
      if (zero_factor) {
        CHECK(r.map.zero(i, j));
        continue;
      }
      if (std::abs(margin) < 1e-9) continue;
      CHECK(r.map.zero(i, j) == (margin < 0));
      any_dead = any_dead || margin < 0;
    }
  CHECK(any_dead);
}

TEST_CASE("full Phi atom-atom map equals the sign of the closed-form Q") {
  const auto alphas = linspace(0.0, pi / 2, 101);
  const auto times = linspace(0.0, 4 * pi, 201);
  const SweepResult r = sweep(Family::Phi, PairLabel::AB, alphas, times, kUnitG,
                              Engine::numeric);
  std::size_t dead = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = 0; j < times.size(); ++j) {
      const double q = cf::phi_resonance(alphas[i], 1.0, times[j]).q(PairLabel::AB);
      CHECK(r.map.zero(i, j) == (q <= 1e-14));
      dead += r.map.zero(i, j);
    }
  CHECK(dead > 0);
}

TEST_CASE("analytic and numeric masks agree on the default grid") {
  const auto alphas = linspace(0.0, pi / 2, 21);
  const auto times = linspace(0.0, 4 * pi, 41);
  for (Family f : {Family::Phi, Family::Psi})
    for (PairLabel p : kAllPairs) {
      const SweepResult a = sweep(f, p, alphas, times, kUnitG, Engine::analytic);
      const SweepResult n = sweep(f, p, alphas, times, kUnitG, Engine::numeric);
      CHECK(a.map.zero_mask == n.map.zero_mask);
    }
}

TEST_CASE("linspace") {
  CHECK(linspace(0.0, 1.0, 1) == std::vector<double>{0.0});
  const auto v = linspace(0.0, 1.0, 5);
  CHECK(v == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}
