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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "netlift/rng.hpp"

namespace nk = netlift::kernels;

namespace {

// Equivalence tolerance scaled by the absolute mass of the reduction:
// scalar and SIMD paths differ only by summation order, so the gap is
// bounded by a small multiple of eps * sum(|terms|).
constexpr double kTol = 1e-12;

std::vector<double> random_vec(netlift::Rng& rng, std::size_t n,
                               double lo = -1.0, double hi = 1.0) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

double abs_mass2(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m += std::fabs(a[i] * b[i]);
  return m;
}

const std::size_t kSizes[] = {0, 1, 3, 4, 7, 8, 31, 64, 257, 4097};

struct BackendGuard {
  nk::Backend saved;
  BackendGuard() : saved(nk::active_backend()) {}
  ~BackendGuard() { nk::set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar and avx2 kernels agree") {
  if (!nk::avx2_supported()) {
    MESSAGE("AVX2 not available; equivalence suite runs scalar-only");
    return;
  }
  BackendGuard guard;
  netlift::Rng rng(20260810);

  for (std::size_t n : kSizes) {
    auto a = random_vec(rng, n, -3.0, 3.0);
    auto b = random_vec(rng, n, -3.0, 3.0);
    auto c = random_vec(rng, n, -3.0, 3.0);

    nk::set_backend(nk::Backend::kScalar);
    const double dot_ref = nk::dot(a.data(), b.data(), n);
    const double dot3_ref = nk::dot3(a.data(), b.data(), c.data(), n);
    const double sum_ref = nk::sum(a.data(), n);
    auto y_ref = c;
    nk::axpy(1.7, a.data(), y_ref.data(), n);

    nk::set_backend(nk::Backend::kAvx2);
    const double dot_simd = nk::dot(a.data(), b.data(), n);
    const double dot3_simd = nk::dot3(a.data(), b.data(), c.data(), n);
    const double sum_simd = nk::sum(a.data(), n);
    auto y_simd = c;
    nk::axpy(1.7, a.data(), y_simd.data(), n);

    const double mass = abs_mass2(a, b) + 1.0;
    CHECK(std::fabs(dot_ref - dot_simd) <= kTol * mass);
    CHECK(std::fabs(dot3_ref - dot3_simd) <= kTol * 3.0 * mass);
    CHECK(std::fabs(sum_ref - sum_simd) <= kTol * (std::fabs(sum_ref) + n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      // axpy is elementwise; results must match bit-for-bit up to FMA
      // contraction of a single multiply-add.
      CHECK(std::fabs(y_ref[i] - y_simd[i]) <=
            1e-15 * (std::fabs(y_ref[i]) + 1.0));
    }
  }
}

TEST_CASE("matrix kernels agree across backends") {
  if (!nk::avx2_supported()) return;
  BackendGuard guard;
  netlift::Rng rng(7);

  for (std::size_t rows : {1u, 5u, 64u}) {
    for (std::size_t cols : {1u, 3u, 10u, 51u}) {
      auto x = random_vec(rng, rows * cols);
      auto w = random_vec(rng, cols);
      auto coef = random_vec(rng, rows);

      std::vector<double> s_ref(rows), s_simd(rows);
      std::vector<double> g_ref(cols, 0.0), g_simd(cols, 0.0);

      nk::set_backend(nk::Backend::kScalar);
      nk::affine_scores(x.data(), rows, cols, w.data(), 0.25, s_ref.data());
      nk::accumulate_xtv(x.data(), coef.data(), rows, cols, g_ref.data());

      nk::set_backend(nk::Backend::kAvx2);
      nk::affine_scores(x.data(), rows, cols, w.data(), 0.25, s_simd.data());
      nk::accumulate_xtv(x.data(), coef.data(), rows, cols, g_simd.data());

      for (std::size_t r = 0; r < rows; ++r) {
        CHECK(s_ref[r] == doctest::Approx(s_simd[r]).epsilon(1e-12));
      }
      for (std::size_t j = 0; j < cols; ++j) {
        CHECK(g_ref[j] == doctest::Approx(g_simd[j]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("kernel reference semantics") {
  BackendGuard guard;
  nk::set_backend(nk::Backend::kScalar);

  const std::vector<double> a = {1.0, 2.0, 3.0};
  const std::vector<double> b = {4.0, 5.0, 6.0};
  const std::vector<double> c = {1.0, 0.0, 2.0};
  CHECK(nk::dot(a.data(), b.data(), 3) == doctest::Approx(32.0));
  CHECK(nk::dot3(a.data(), b.data(), c.data(), 3) == doctest::Approx(40.0));
  CHECK(nk::sum(a.data(), 3) == doctest::Approx(6.0));

  std::vector<double> y = {1.0, 1.0, 1.0};
  nk::axpy(2.0, a.data(), y.data(), 3);
  CHECK(y[0] == doctest::Approx(3.0));
  CHECK(y[2] == doctest::Approx(7.0));

  // affine_scores on a 2x3 matrix.
  const std::vector<double> x = {1, 0, 0, 0, 1, 1};
  std::vector<double> out(2);
  nk::affine_scores(x.data(), 2, 3, a.data(), 10.0, out.data());
  CHECK(out[0] == doctest::Approx(11.0));
  CHECK(out[1] == doctest::Approx(15.0));

  // Empty reductions are well-defined.
  CHECK(nk::dot(a.data(), b.data(), 0) == 0.0);
  CHECK(nk::sum(a.data(), 0) == 0.0);
}

TEST_CASE("backend selection is sticky and reversible") {
  BackendGuard guard;
  nk::set_backend(nk::Backend::kScalar);
  CHECK(nk::active_backend() == nk::Backend::kScalar);
  if (nk::avx2_supported()) {
    nk::set_backend(nk::Backend::kAvx2);
    CHECK(nk::active_backend() == nk::Backend::kAvx2);
  }
}
