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

#include "netlift/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "netlift/errors.hpp"
#include "kernels_impl.hpp"

namespace netlift::kernels {

namespace {

// ---------------------------------------------------------------------------
// Scalar reference kernels. These define the semantics; the SIMD
// variants must agree with them up to summation order.
// ---------------------------------------------------------------------------

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double dot3_scalar(const double* a, const double* b, const double* c,
                   std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] * c[i];
  return acc;
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void affine_scores_scalar(const double* x, std::size_t rows, std::size_t cols,
                          const double* w, double bias, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = bias + dot_scalar(x + r * cols, w, cols);
  }
}

void accumulate_xtv_scalar(const double* x, const double* coef,
                           std::size_t rows, std::size_t cols, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    axpy_scalar(coef[r], x + r * cols, out, cols);
  }
}

constexpr Ops kScalarOps = {
    dot_scalar,  dot3_scalar,          sum_scalar,
    axpy_scalar, affine_scores_scalar, accumulate_xtv_scalar,
};

std::atomic<const Ops*> g_active{nullptr};
std::atomic<Backend> g_backend{Backend::kScalar};

const Ops* resolve_default() {
  const char* env = std::getenv("NETLIFT_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
    if (std::strcmp(env, "avx2") == 0 && avx2_ops() != nullptr) {
      g_backend.store(Backend::kAvx2, std::memory_order_relaxed);
      return avx2_ops();
    }
    // Unknown value or unsupported request: fall through to auto.
  }
  if (const Ops* simd = avx2_ops()) {
    g_backend.store(Backend::kAvx2, std::memory_order_relaxed);
    return simd;
  }
  return &scalar_ops();
}

const Ops& active() {
  const Ops* ops = g_active.load(std::memory_order_acquire);
  if (ops == nullptr) {
    ops = resolve_default();
    g_active.store(ops, std::memory_order_release);
  }
  return *ops;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

bool avx2_supported() { return avx2_ops() != nullptr; }

Backend active_backend() {
  active();
  return g_backend.load(std::memory_order_relaxed);
}

void set_backend(Backend backend) {
  if (backend == Backend::kAvx2) {
    const Ops* simd = avx2_ops();
    if (simd == nullptr) {
      throw ConfigError("AVX2 kernels are not available on this machine");
    }
    g_active.store(simd, std::memory_order_release);
  } else {
    g_active.store(&scalar_ops(), std::memory_order_release);
  }
  g_backend.store(backend, std::memory_order_relaxed);
}

const char* backend_name(Backend backend) {
  return backend == Backend::kAvx2 ? "avx2" : "scalar";
}

double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}

double dot3(const double* a, const double* b, const double* c,
            std::size_t n) {
  return active().dot3(a, b, c, n);
}

double sum(const double* a, std::size_t n) { return active().sum(a, n); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  active().axpy(alpha, x, y, n);
}

void affine_scores(const double* x, std::size_t rows, std::size_t cols,
                   const double* w, double bias, double* out) {
  active().affine_scores(x, rows, cols, w, bias, out);
}

void accumulate_xtv(const double* x, const double* coef, std::size_t rows,
                    std::size_t cols, double* out) {
  active().accumulate_xtv(x, coef, rows, cols, out);
}

}  // namespace netlift::kernels
