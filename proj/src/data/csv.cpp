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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "netlift/dataset.hpp"
#include "netlift/errors.hpp"

namespace netlift {

namespace {

bool parse_finite_double(std::string_view text, double& out) {
  // Trim spaces and an optional CR left over from CRLF files.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() &&
         (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return false;
  double parsed = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, parsed);
  if (ec != std::errc{} || ptr != end || !std::isfinite(parsed)) return false;
  out = parsed;
  return true;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream stream(line);
  while (std::getline(stream, cell, ',')) {
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::size_t column_index(const std::vector<std::string>& header,
                         const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw SchemaError("missing column '" + name + "'");
}

}  // namespace

ExperimentDataset load_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream file(path);
  if (!file.is_open()) {
    throw ConfigError("cannot open '" + path + "'");
  }

  std::string line;
  // Header, skipping leading comment lines ('#').
  do {
    if (!std::getline(file, line)) {
      throw ParseError("'" + path + "' is empty (no header row)");
    }
  } while (!line.empty() && line[0] == '#');

  const std::vector<std::string> header = split_line(line);

  std::vector<std::string> feature_names = schema.feature_columns;
  if (feature_names.empty()) {
    for (const std::string& col : header) {
      if (col.rfind(schema.feature_prefix, 0) == 0 &&
          col != schema.treatment_column && col != schema.gain_column &&
          col != schema.cost_column && col != schema.id_column) {
        feature_names.push_back(col);
      }
    }
    if (feature_names.empty()) {
      throw SchemaError("no feature columns match prefix '" +
                        schema.feature_prefix + "'");
    }
  }

  std::vector<std::size_t> feature_idx;
  feature_idx.reserve(feature_names.size());
  for (const std::string& name : feature_names) {
    feature_idx.push_back(column_index(header, name));
  }
  const std::size_t treatment_idx =
      column_index(header, schema.treatment_column);
  const std::size_t gain_idx = column_index(header, schema.gain_column);
  const std::size_t cost_idx = column_index(header, schema.cost_column);
  const bool has_ids = !schema.id_column.empty();
  const std::size_t id_idx = has_ids ? column_index(header, schema.id_column) : 0;

  const std::size_t d = feature_names.size();
  std::vector<double> values;
  ExperimentDataset ds;
  ds.feature_names = feature_names;

  std::vector<std::vector<double>> rows;
  std::size_t row_number = 0;  // 1-based data row, matches error messages
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++row_number;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw ParseError("row " + std::to_string(row_number) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(header.size()));
    }

    std::vector<double> row(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (!parse_finite_double(cells[feature_idx[j]], row[j])) {
        throw ParseError("non-numeric value '" + cells[feature_idx[j]] +
                         "' in column '" + feature_names[j] + "' at row " +
                         std::to_string(row_number));
      }
    }
    rows.push_back(std::move(row));

    double t = 0.0;
    if (!parse_finite_double(cells[treatment_idx], t)) {
      throw ParseError("non-numeric treatment at row " +
                       std::to_string(row_number));
    }
    if (t != 0.0 && t != 1.0) {
      throw ValidationError("treatment value outside {0,1} at row " +
                            std::to_string(row_number));
    }
    ds.treatment.push_back(static_cast<std::uint8_t>(t));

    double g = 0.0;
    double c = 0.0;
    if (!parse_finite_double(cells[gain_idx], g)) {
      throw ParseError("non-numeric gain at row " +
                       std::to_string(row_number));
    }
    if (!parse_finite_double(cells[cost_idx], c)) {
      throw ParseError("non-numeric cost at row " +
                       std::to_string(row_number));
    }
    ds.gain.push_back(g);
    ds.cost.push_back(c);
    ds.ids.push_back(has_ids ? cells[id_idx]
                             : "row-" + std::to_string(row_number - 1));
  }

  ds.features = Matrix(rows.size(), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double* dst = ds.features.row(i);
    for (std::size_t j = 0; j < d; ++j) dst[j] = rows[i][j];
  }

  validate_dataset(ds);
  return ds;
}

void save_csv(const ExperimentDataset& ds, const std::string& path,
              const std::string& comment) {
  std::ofstream file(path);
  if (!file.is_open()) {
    throw ConfigError("cannot write '" + path + "'");
  }
  if (!comment.empty()) file << "# " << comment << "\n";

  file << "id";
  for (std::size_t j = 0; j < ds.dim(); ++j) {
    file << ','
         << (j < ds.feature_names.size() ? ds.feature_names[j]
                                         : "f" + std::to_string(j));
  }
  file << ",treatment,gain,cost\n";

  char buf[32];
  auto write_double = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    file << buf;
  };

  for (std::size_t i = 0; i < ds.size(); ++i) {
    file << (i < ds.ids.size() ? ds.ids[i] : "row-" + std::to_string(i));
    const double* row = ds.features.row(i);
    for (std::size_t j = 0; j < ds.dim(); ++j) {
      file << ',';
      write_double(row[j]);
    }
    file << ',' << static_cast<int>(ds.treatment[i]) << ',';
    write_double(ds.gain[i]);
    file << ',';
    write_double(ds.cost[i]);
    file << '\n';
  }
}

}  // namespace netlift
