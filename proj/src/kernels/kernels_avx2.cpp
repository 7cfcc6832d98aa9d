// Copyright 2026 The flagcap Authors
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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after a runtime CPU check.

#include <immintrin.h>

#include "flagcap/kernels.hpp"

namespace flagcap::kernels::avx2 {

namespace {

// (ar + i ai) * [b0, b1] for two interleaved complex values in b.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

}  // namespace

void cgemm_acc(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  auto* cd = reinterpret_cast<double*>(c);
  const auto* bd = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = cd + 2 * i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double ar_s = a[i * k + l].real();
      const double ai_s = a[i * k + l].imag();
      if (ar_s == 0.0 && ai_s == 0.0) continue;
      const __m256d ar = _mm256_set1_pd(ar_s);
      const __m256d ai = _mm256_set1_pd(ai_s);
      const double* brow = bd + 2 * l * n;
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
        __m256d c1 = _mm256_loadu_pd(crow + 2 * j + 4);
        c0 = _mm256_add_pd(c0, cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * j)));
        c1 = _mm256_add_pd(c1, cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * j + 4)));
        _mm256_storeu_pd(crow + 2 * j, c0);
        _mm256_storeu_pd(crow + 2 * j + 4, c1);
      }
      for (; j + 2 <= n; j += 2) {
        __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
        c0 = _mm256_add_pd(c0, cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * j)));
        _mm256_storeu_pd(crow + 2 * j, c0);
      }
      for (; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar_s * br - ai_s * bi;
        crow[2 * j + 1] += ar_s * bi + ai_s * br;
      }
    }
  }
}

cplx cdotc(const cplx* x, const cplx* y, std::size_t len) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  __m256d same = _mm256_setzero_pd();   // [xr*yr, xi*yi, ...]
  __m256d cross = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  alignas(32) double s[4];
  alignas(32) double t[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(t, cross);
  double re = (s[0] + s[2]) + (s[1] + s[3]);
  double im = (t[0] + t[2]) - (t[1] + t[3]);
  for (; i < len; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace flagcap::kernels::avx2
