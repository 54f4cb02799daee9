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

#include "netlift/dataset.hpp"

#include <cmath>
#include <string>

#include "netlift/errors.hpp"
#include "netlift/rng.hpp"

namespace netlift {

void validate_dataset(const ExperimentDataset& ds) {
  const std::size_t n = ds.treatment.size();
  if (ds.features.rows() != n || ds.gain.size() != n || ds.cost.size() != n) {
    throw ValidationError("dataset arrays disagree on row count");
  }
  if (!ds.ids.empty() && ds.ids.size() != n) {
    throw ValidationError("id column length does not match row count");
  }
  if (!ds.feature_names.empty() &&
      ds.feature_names.size() != ds.features.cols()) {
    throw ValidationError("feature name count does not match column count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ds.treatment[i] > 1) {
      throw ValidationError("treatment value outside {0,1} at row " +
                            std::to_string(i));
    }
    if (!std::isfinite(ds.gain[i]) || !std::isfinite(ds.cost[i])) {
      throw ValidationError("non-finite outcome at row " + std::to_string(i));
    }
    const double* row = ds.features.row(i);
    for (std::size_t c = 0; c < ds.features.cols(); ++c) {
      if (!std::isfinite(row[c])) {
        throw ValidationError("non-finite feature at row " +
                              std::to_string(i) + ", column " +
                              std::to_string(c));
      }
    }
  }
}

std::size_t treated_count(std::span<const std::uint8_t> treatment) {
  std::size_t count = 0;
  for (std::uint8_t t : treatment) count += t;
  return count;
}

void require_both_groups(std::span<const std::uint8_t> treatment,
                         const char* context) {
  const std::size_t treated = treated_count(treatment);
  if (treated == 0 || treated == treatment.size()) {
    throw FitError(std::string(context) +
                   ": needs at least one treated and one control row");
  }
}

ExperimentDataset select_rows(const ExperimentDataset& ds,
                              std::span<const std::size_t> rows) {
  ExperimentDataset out;
  out.features = take_rows(ds.features, rows);
  out.treatment = take(ds.treatment, rows);
  out.gain = take(ds.gain, rows);
  out.cost = take(ds.cost, rows);
  if (!ds.ids.empty()) out.ids = take(ds.ids, rows);
  out.feature_names = ds.feature_names;
  return out;
}

DatasetSplit split_dataset(std::size_t n_rows,
                           const SplitFractions& fractions,
                           std::uint64_t seed) {
  const double total =
      fractions.train + fractions.validation + fractions.test;
  if (fractions.train <= 0 || fractions.validation <= 0 ||
      fractions.test <= 0) {
    throw ConfigError("split fractions must be positive");
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    throw ConfigError("split fractions must sum to 1, got " +
                      std::to_string(total));
  }

  Rng rng(seed);
  const std::vector<std::size_t> order = rng.permutation(n_rows);

  const double n = static_cast<double>(n_rows);
  std::size_t n_train = static_cast<std::size_t>(
      std::llround(n * fractions.train));
  std::size_t n_val = static_cast<std::size_t>(
      std::llround(n * fractions.validation));
  if (n_train > n_rows) n_train = n_rows;
  if (n_train + n_val > n_rows) n_val = n_rows - n_train;

  DatasetSplit split;
  split.train.assign(order.begin(), order.begin() + n_train);
  split.validation.assign(order.begin() + n_train,
                          order.begin() + n_train + n_val);
  split.test.assign(order.begin() + n_train + n_val, order.end());
  split.degenerate = split.train.empty() || split.validation.empty() ||
                     split.test.empty();
  return split;
}

double LinearEffect::eval(const double* x, std::size_t d) const {
  double value = intercept;
  for (std::size_t i = 0; i < coeffs.size() && i < d; ++i) {
    value += coeffs[i] * x[i];
  }
  return value;
}

}  // namespace netlift
