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

// Complex inner-loop kernels with a scalar reference implementation and an
// AVX2/FMA variant chosen at runtime. Every variant must agree with the
// scalar path to rounding.

#include <cstddef>
#include <string_view>

#include "jcq/cmatrix.hpp"

namespace jcq::kernels {

struct KernelTable {
  std::string_view name;
  // y[rows] = A x, A row-major rows x cols.
  void (*matvec)(const cplx* a, std::size_t rows, std::size_t cols,
                 const cplx* x, cplx* y);
  // y[cols] = A^dagger x.
  void (*matvec_adjoint)(const cplx* a, std::size_t rows, std::size_t cols,
                         const cplx* x, cplx* y);
  // out[i] = x[i] * y[i]; out may alias x.
  void (*hadamard)(const cplx* x, const cplx* y, cplx* out, std::size_t n);
  // sum |x[i]|^2
  double (*norm2)(const cplx* x, std::size_t n);
};

const KernelTable& scalar();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2();

// The table used by the library. AVX2 when available unless the environment
// variable JCQ_SIMD is set to "scalar".
const KernelTable& active();

}  // namespace jcq::kernels
