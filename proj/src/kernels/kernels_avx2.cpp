/*
 * Copyright 2026 The Netlift Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; nothing here may be called unless the runtime CPU
// check in avx2_ops() passes.

#include "kernels_impl.hpp"

#if defined(NETLIFT_HAVE_AVX2)

#include <immintrin.h>

#include <cstddef>

namespace netlift::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
  }
  double total = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

double dot3_avx2(const double* a, const double* b, const double* c,
                 std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ab =
        _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + i), acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += a[i] * b[i] * c[i];
  return total;
}

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += a[i];
  return total;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d updated =
        _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, updated);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void affine_scores_avx2(const double* x, std::size_t rows, std::size_t cols,
                        const double* w, double bias, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = bias + dot_avx2(x + r * cols, w, cols);
  }
}

void accumulate_xtv_avx2(const double* x, const double* coef,
                         std::size_t rows, std::size_t cols, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    axpy_avx2(coef[r], x + r * cols, out, cols);
  }
}

constexpr Ops kAvx2Ops = {
    dot_avx2,  dot3_avx2,          sum_avx2,
    axpy_avx2, affine_scores_avx2, accumulate_xtv_avx2,
};

}  // namespace

const Ops* avx2_ops() {
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2Ops : nullptr;
}

}  // namespace netlift::kernels

#else  // !NETLIFT_HAVE_AVX2

namespace netlift::kernels {

const Ops* avx2_ops() { return nullptr; }

}  // namespace netlift::kernels

#endif
