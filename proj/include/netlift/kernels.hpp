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

#ifndef NETLIFT_KERNELS_HPP_
#define NETLIFT_KERNELS_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

// Arithmetic inner loops used by the trainers and estimators. Every
// primitive has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant selected once per process. The variants may differ
// from the reference only by floating-point summation order; the test
// suite asserts equivalence within magnitude-scaled tolerances.
//
// Transcendentals (tanh, exp, sigmoid) are evaluated with scalar libm
// on every backend, so backend choice never changes elementwise math.
//
// Selection: AVX2 when the CPU supports it, overridable with the
// NETLIFT_KERNELS environment variable ("scalar" or "avx2") or
// set_backend(). The choice is sticky for the process, which keeps
// repeated runs on one machine bit-identical.

namespace netlift::kernels {

enum class Backend { kScalar, kAvx2 };

bool avx2_supported();
Backend active_backend();
// Throws ConfigError if the requested backend is unavailable.
void set_backend(Backend backend);
const char* backend_name(Backend backend);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i a[i] * b[i] * c[i]
double dot3(const double* a, const double* b, const double* c, std::size_t n);

// sum_i a[i]
double sum(const double* a, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// out[i] = dot(x_row_i, w) + bias, for a row-major matrix with `rows`
// rows of `cols` doubles.
void affine_scores(const double* x, std::size_t rows, std::size_t cols,
                   const double* w, double bias, double* out);

// out[j] += sum_i coef[i] * x[i][j]  (X^T v accumulation)
void accumulate_xtv(const double* x, const double* coef, std::size_t rows,
                    std::size_t cols, double* out);

// Elementwise transcendental helpers, shared by all backends.
inline void tanh_inplace(std::span<double> v) {
  for (double& x : v) x = std::tanh(x);
}

inline void sigmoid_inplace(std::span<double> v) {
  for (double& x : v) x = 1.0 / (1.0 + std::exp(-x));
}

// Convenience span wrappers.
inline double dot(std::span<const double> a, std::span<const double> b) {
  return dot(a.data(), b.data(), a.size());
}
inline double sum(std::span<const double> a) { return sum(a.data(), a.size()); }

}  // namespace netlift::kernels

#endif  // NETLIFT_KERNELS_HPP_
