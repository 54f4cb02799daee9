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

#ifndef NETLIFT_RNG_HPP_
#define NETLIFT_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace netlift {

// Seeded random draws built directly on the mt19937_64 bit stream.
// std::uniform_real_distribution / std::normal_distribution are
// implementation-defined, which would break bit-reproducibility of
// datasets and runs across standard libraries, so the mappings from
// raw 64-bit words to doubles live here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller. Draws two uniforms per call and
  // discards the spare so the stream position is input-independent.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return radius * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n) by rejection; unbiased for any n.
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % n;
  }

  // Fisher-Yates permutation of {0, ..., n-1}.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(order[i - 1], order[j]);
    }
    return order;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netlift

#endif  // NETLIFT_RNG_HPP_
