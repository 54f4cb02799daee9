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

#ifndef NETLIFT_DATASET_HPP_
#define NETLIFT_DATASET_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netlift/matrix.hpp"

namespace netlift {

// One randomized experiment: per-row features, a binary treatment
// assignment, and two outcomes measured over the experiment period
// (a desired gain and an undesired cost). Immutable by convention
// once built; readers may share instances across threads.
struct ExperimentDataset {
  Matrix features;                      // N x d
  std::vector<std::uint8_t> treatment;  // 0 = control, 1 = treated
  std::vector<double> gain;             // Y^r
  std::vector<double> cost;             // Y^c
  std::vector<std::string> ids;
  std::vector<std::string> feature_names;

  std::size_t size() const { return treatment.size(); }
  std::size_t dim() const { return features.cols(); }

  bool operator==(const ExperimentDataset&) const = default;
};

// Throws ValidationError on length mismatches, treatment values outside
// {0,1}, or non-finite features/outcomes.
void validate_dataset(const ExperimentDataset& ds);

std::size_t treated_count(std::span<const std::uint8_t> treatment);

// Throws FitError unless both treatment groups are nonempty.
void require_both_groups(std::span<const std::uint8_t> treatment,
                         const char* context);

ExperimentDataset select_rows(const ExperimentDataset& ds,
                              std::span<const std::size_t> rows);

// ---------------------------------------------------------------------------
// CSV ingestion
// ---------------------------------------------------------------------------

// Column mapping for load_csv. Feature columns are either an explicit
// list or every column sharing `feature_prefix`; the latter applies
// when the list is empty.
struct CsvSchema {
  std::vector<std::string> feature_columns;
  std::string feature_prefix = "f";
  std::string treatment_column = "treatment";
  std::string gain_column = "gain";
  std::string cost_column = "cost";
  std::string id_column;  // optional; row index used when empty
};

ExperimentDataset load_csv(const std::string& path, const CsvSchema& schema);
void save_csv(const ExperimentDataset& ds, const std::string& path,
              const std::string& comment = "");

// ---------------------------------------------------------------------------
// Train / validation / test splitting
// ---------------------------------------------------------------------------

struct SplitFractions {
  double train = 0.6;
  double validation = 0.2;
  double test = 0.2;
};

struct DatasetSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
  // Set when some part ended up empty (dataset too small for the
  // requested fractions).
  bool degenerate = false;
};

// Seeded uniform permutation followed by contiguous assignment; sizes
// are within one row of N * fraction. Throws ConfigError if fractions
// are not positive or do not sum to 1 within 1e-9.
DatasetSplit split_dataset(std::size_t n_rows, const SplitFractions& fractions,
                           std::uint64_t seed);

inline DatasetSplit split_dataset(const ExperimentDataset& ds,
                                  const SplitFractions& fractions,
                                  std::uint64_t seed) {
  return split_dataset(ds.size(), fractions, seed);
}

// ---------------------------------------------------------------------------
// Synthetic experiments with known ground-truth effects
// ---------------------------------------------------------------------------

struct LinearEffect {
  std::vector<double> coeffs;  // length d (empty means all-zero)
  double intercept = 0.0;

  double eval(const double* x, std::size_t d) const;
  bool operator==(const LinearEffect&) const = default;
};

struct SyntheticSpec {
  std::size_t n_samples = 0;
  std::size_t n_features = 0;
  double treat_fraction = 0.5;
  LinearEffect gain_baseline;
  LinearEffect gain_effect;
  LinearEffect cost_baseline;
  LinearEffect cost_effect;
  double noise_std = 0.0;
  std::uint64_t seed = 0;
};

// True per-row treatment effects used as oracles in tests.
struct SyntheticOracle {
  std::vector<double> tau_gain;
  std::vector<double> tau_cost;
};

// X rows are standard normal, T ~ Bernoulli(treat_fraction), and each
// outcome is baseline(x) + T * effect(x) + noise_std * N(0,1).
// Deterministic: the same spec yields a bit-identical dataset.
std::pair<ExperimentDataset, SyntheticOracle> gen_synthetic(
    const SyntheticSpec& spec);

void validate_spec(const SyntheticSpec& spec);

// ---------------------------------------------------------------------------
// Feature standardization
// ---------------------------------------------------------------------------

struct FeatureStats {
  std::vector<double> mean;
  std::vector<double> stddev;  // 0 marks a zero-variance feature

  bool operator==(const FeatureStats&) const = default;
};

// Population statistics over the given rows (all rows when empty).
FeatureStats compute_feature_stats(const ExperimentDataset& ds,
                                   std::span<const std::size_t> rows = {});

Matrix standardize(const Matrix& features, const FeatureStats& stats);

// Spec-shaped wrapper: z-scores with the provided stats, or with stats
// computed from ds itself when absent. Zero-variance features map to 0.
std::pair<ExperimentDataset, FeatureStats> standardize(
    const ExperimentDataset& ds, std::optional<FeatureStats> stats);

}  // namespace netlift

#endif  // NETLIFT_DATASET_HPP_
