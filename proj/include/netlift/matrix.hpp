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

#ifndef NETLIFT_MATRIX_HPP_
#define NETLIFT_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace netlift {

// Dense row-major matrix of doubles. Rows are contiguous so the SIMD
// kernels can stream them directly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return values_.empty(); }

  double* row(std::size_t r) { return values_.data() + r * cols_; }
  const double* row(std::size_t r) const { return values_.data() + r * cols_; }

  std::span<double> row_span(std::size_t r) { return {row(r), cols_}; }
  std::span<const double> row_span(std::size_t r) const {
    return {row(r), cols_};
  }

  double& operator()(std::size_t r, std::size_t c) {
    return values_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return values_[r * cols_ + c];
  }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Materializes the given rows (in order) as a new matrix.
inline Matrix take_rows(const Matrix& m, std::span<const std::size_t> rows) {
  Matrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double* src = m.row(rows[i]);
    double* dst = out.row(i);
    for (std::size_t c = 0; c < m.cols(); ++c) dst[c] = src[c];
  }
  return out;
}

template <typename T>
std::vector<T> take(const std::vector<T>& v,
                    std::span<const std::size_t> idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

}  // namespace netlift

#endif  // NETLIFT_MATRIX_HPP_
