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

#include <string>
#include <vector>

#include "jcq/jcmodel.hpp"

namespace jcq {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst deviation, or the measured value
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  JCParams params = resonant(5.0, 0.5);
  std::size_t alpha_points = 21;  // over [0, pi/2]
  std::size_t time_points = 41;   // over Gt in [0, 4 pi]
  double agree_tol = 1e-9;
  // Adds this amount to one atom-cavity coupling entry of the numeric
  // Hamiltonian (Hermitian-symmetrically). Zero disables the fault.
  double fault = 0.0;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace jcq
