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

#ifndef NETLIFT_SRC_KERNELS_KERNELS_IMPL_HPP_
#define NETLIFT_SRC_KERNELS_KERNELS_IMPL_HPP_

#include <cstddef>

namespace netlift::kernels {

// Per-backend function table. Filled in by the scalar reference
// implementation and, when compiled in, the AVX2 translation unit.
struct Ops {
  double (*dot)(const double*, const double*, std::size_t);
  double (*dot3)(const double*, const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*affine_scores)(const double*, std::size_t, std::size_t,
                        const double*, double, double*);
  void (*accumulate_xtv)(const double*, const double*, std::size_t,
                         std::size_t, double*);
};

const Ops& scalar_ops();

// Null when the binary was built without AVX2 support.
const Ops* avx2_ops();

}  // namespace netlift::kernels

#endif  // NETLIFT_SRC_KERNELS_KERNELS_IMPL_HPP_
