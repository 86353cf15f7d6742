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

// Built with -mavx2 -mfma on x86-64 only; see src/CMakeLists.txt.

#include "jcq/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace jcq::kernels {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

// conj(a) * (xr + i xi), x broadcast.
inline __m256d cmul_conj_bcast(__m256d a, __m256d xr, __m256d xi) {
  const __m256d t = _mm256_mul_pd(a, xr);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmsubadd_pd(a_sw, xi, t);
}

inline cplx hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return {out[0], out[1]};
}

inline const double* dp(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

void matvec_avx2(const cplx* a, std::size_t rows, std::size_t cols,
                 const cplx* x, cplx* y) {
  const std::size_t pairs = cols / 2;
  for (std::size_t i = 0; i < rows; ++i) {
    const cplx* row = a + i * cols;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < pairs; ++k) {
      const __m256d av = _mm256_loadu_pd(dp(row + 2 * k));
      const __m256d xv = _mm256_loadu_pd(dp(x + 2 * k));
      acc = _mm256_add_pd(acc, cmul(av, xv));
    }
    cplx sum = hsum(acc);
    if (cols % 2) sum += row[cols - 1] * x[cols - 1];
    y[i] = sum;
  }
}

void matvec_adjoint_avx2(const cplx* a, std::size_t rows, std::size_t cols,
                         const cplx* x, cplx* y) {
  const std::size_t pairs = cols / 2;
  for (std::size_t j = 0; j < cols; ++j) y[j] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const cplx* row = a + i * cols;
    const __m256d xr = _mm256_set1_pd(x[i].real());
    const __m256d xi = _mm256_set1_pd(x[i].imag());
    for (std::size_t k = 0; k < pairs; ++k) {
      const __m256d av = _mm256_loadu_pd(dp(row + 2 * k));
      const __m256d yv = _mm256_loadu_pd(dp(y + 2 * k));
      _mm256_storeu_pd(dp(y + 2 * k),
                       _mm256_add_pd(yv, cmul_conj_bcast(av, xr, xi)));
    }
    if (cols % 2) y[cols - 1] += std::conj(row[cols - 1]) * x[i];
  }
}

void hadamard_avx2(const cplx* x, const cplx* y, cplx* out, std::size_t n) {
  const std::size_t pairs = n / 2;
  for (std::size_t k = 0; k < pairs; ++k) {
    const __m256d xv = _mm256_loadu_pd(dp(x + 2 * k));
    const __m256d yv = _mm256_loadu_pd(dp(y + 2 * k));
    _mm256_storeu_pd(dp(out + 2 * k), cmul(xv, yv));
  }
  if (n % 2) out[n - 1] = x[n - 1] * y[n - 1];
}

double norm2_avx2(const cplx* x, std::size_t n) {
  const std::size_t pairs = n / 2;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t k = 0; k < pairs; ++k) {
    const __m256d v = _mm256_loadu_pd(dp(x + 2 * k));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  const cplx h = hsum(acc);
  double s = h.real() + h.imag();
  if (n % 2) s += std::norm(x[n - 1]);
  return s;
}

constexpr KernelTable kAvx2{"avx2", matvec_avx2, matvec_adjoint_avx2,
                            hadamard_avx2, norm2_avx2};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace jcq::kernels

#else

namespace jcq::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace jcq::kernels

#endif
