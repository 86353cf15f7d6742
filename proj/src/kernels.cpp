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

#include <cstdlib>
#include <string_view>

#include "jcq/kernels.hpp"

namespace jcq::kernels {

namespace {

void matvec_scalar(const cplx* a, std::size_t rows, std::size_t cols,
                   const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < rows; ++i) {
    const cplx* row = a + i * cols;
    cplx acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_adjoint_scalar(const cplx* a, std::size_t rows, std::size_t cols,
                           const cplx* x, cplx* y) {
  for (std::size_t j = 0; j < cols; ++j) y[j] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const cplx* row = a + i * cols;
    const cplx xi = x[i];
    for (std::size_t j = 0; j < cols; ++j) y[j] += std::conj(row[j]) * xi;
  }
}

void hadamard_scalar(const cplx* x, const cplx* y, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

double norm2_scalar(const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i]);
  return s;
}

constexpr KernelTable kScalar{"scalar", matvec_scalar, matvec_adjoint_scalar,
                              hadamard_scalar, norm2_scalar};

}  // namespace

// Defined in kernels_avx2.cpp; nullptr when not built for x86-64.
const KernelTable* avx2_table();

const KernelTable& scalar() { return kScalar; }

const KernelTable* avx2() {
  static const KernelTable* table = []() -> const KernelTable* {
#if defined(__x86_64__) || defined(_M_X64)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return avx2_table();
#endif
    return nullptr;
  }();
  return table;
}

const KernelTable& active() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* env = std::getenv("JCQ_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return kScalar;
    if (const KernelTable* t = avx2()) return *t;
    return kScalar;
  }();
  return table;
}

}  // namespace jcq::kernels
