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

#include "jcq/closedform.hpp"

#include <algorithm>
#include <cmath>

namespace jcq::closed_form {

namespace {

void set(Values& v, PairLabel p, double q) {
  v.Q[static_cast<int>(p)] = q;
  v.C[static_cast<int>(p)] = 2.0 * std::max(0.0, q);
}

}  // namespace

Values phi_resonance(double alpha, double G, double t) {
  const double half = 0.5 * G * t;
  const double cos2 = std::cos(half) * std::cos(half);
  const double sin2 = std::sin(half) * std::sin(half);
  const double sin_gt = std::abs(std::sin(G * t));
  const double ca2 = std::cos(alpha) * std::cos(alpha);
  // cos^2(alpha) |tan(alpha)|
  const double sc = std::abs(std::sin(alpha) * std::cos(alpha));

  Values v;
  set(v, PairLabel::AB, sc * cos2 - ca2 * cos2 * sin2);
  set(v, PairLabel::ab, sc * sin2 - ca2 * sin2 * cos2);
  const double q_ab_cross = 0.5 * sc * sin_gt - 0.25 * ca2 * sin_gt * sin_gt;
  set(v, PairLabel::Ab, q_ab_cross);
  set(v, PairLabel::Ba, q_ab_cross);
  set(v, PairLabel::Aa, 0.5 * ca2 * sin_gt);
  set(v, PairLabel::Bb, 0.5 * ca2 * sin_gt);
  return v;
}

Values psi_resonance(double alpha, double G, double t) {
  const double half = 0.5 * G * t;
  const double cos2 = std::cos(half) * std::cos(half);
  const double sin2 = std::sin(half) * std::sin(half);
  const double sin_gt = std::abs(std::sin(G * t));
  const double ca2 = std::cos(alpha) * std::cos(alpha);
  const double sa2 = std::sin(alpha) * std::sin(alpha);
  const double sc = std::abs(std::sin(alpha) * std::cos(alpha));

  Values v;
  set(v, PairLabel::AB, sc * cos2);
  set(v, PairLabel::ab, sc * sin2);
  set(v, PairLabel::Ab, 0.5 * sc * sin_gt);
  set(v, PairLabel::Ba, 0.5 * sc * sin_gt);
  set(v, PairLabel::Aa, 0.5 * ca2 * sin_gt);
  set(v, PairLabel::Bb, 0.5 * sa2 * sin_gt);
  return v;
}

Values resonance(Family family, double alpha, double G, double t) {
  return family == Family::Phi ? phi_resonance(alpha, G, t)
                               : psi_resonance(alpha, G, t);
}

double Ingredients::q() const { return z_abs - std::sqrt(b * c); }

namespace {

// |c c0 + s s0|^2 and |c s0 - s c0|^2 for a site started in |e,0>.
struct SiteWeights {
  double stay;  // c0^4 + s0^4 + 2 c0^2 s0^2 cos(delta t)
  double flip;  // c0^2 s0^2 (2 - 2 cos(delta t))
};

SiteWeights site_weights(const DressedData& d, double t) {
  const double c2 = d.c * d.c;
  const double s2 = d.s * d.s;
  const double h = std::sin(0.5 * d.delta * t);
  // 2 - 2 cos(x) = 4 sin^2(x / 2)
  return {c2 * c2 + s2 * s2 + 2.0 * c2 * s2 * std::cos(d.delta * t),
          4.0 * c2 * s2 * h * h};
}

}  // namespace

PairIngredients phi_offres_ingredients(double alpha, const DressedData& d,
                                       double t) {
  const auto [P, R] = site_weights(d, t);
  const double ca2 = std::cos(alpha) * std::cos(alpha);
  const double sc = std::abs(std::sin(alpha) * std::cos(alpha));
  PairIngredients out;
  out.AB = {sc * P, ca2 * P * R, ca2 * P * R};
  out.Ab = {sc * std::sqrt(P * R), ca2 * P * P, ca2 * R * R};
  return out;
}

PairIngredients psi_offres_ingredients(double alpha, const DressedData& d,
                                       double t) {
  const auto [P, R] = site_weights(d, t);
  const double ca2 = std::cos(alpha) * std::cos(alpha);
  const double sa2 = std::sin(alpha) * std::sin(alpha);
  const double sc = std::abs(std::sin(alpha) * std::cos(alpha));
  PairIngredients out;
  out.AB = {sc * P, R, 0.0};
  out.Ab = {sc * std::sqrt(P * R), sa2 * P + ca2 * R, 0.0};
  return out;
}

double q_identity_lhs(Family family, double alpha, double G, double t) {
  const Values v = resonance(family, alpha, G, t);
  // Q^Aa = cos^2(alpha) |sin Gt| / 2 in both families, so
  // 2 Q^Aa |tan(alpha)| = |sin(alpha) cos(alpha)| |sin Gt|.
  const double aa_term =
      std::abs(std::sin(alpha) * std::cos(alpha)) * std::abs(std::sin(G * t));
  return v.q(PairLabel::AB) + v.q(PairLabel::ab) + aa_term -
         2.0 * v.q(PairLabel::Ab);
}

}  // namespace jcq::closed_form
