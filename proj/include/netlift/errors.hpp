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

#ifndef NETLIFT_ERRORS_HPP_
#define NETLIFT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netlift {

// Base class for all library errors. The CLI maps the subclasses onto
// process exit codes (see tools/), so new error sites should pick the
// subclass matching the failure category rather than throwing this one.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration: bad fractions, empty grids, malformed specs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A named column is missing from an input file.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A cell could not be parsed (non-numeric or non-finite).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Data fails an invariant (treatment outside {0,1}, length mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Matrix/vector dimensions do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A fit cannot proceed (e.g. one treatment group is empty).
class FitError : public Error {
 public:
  using Error::Error;
};

// Evaluation cannot produce a result (empty group, bad curve endpoint).
class EvalError : public Error {
 public:
  using Error::Error;
};

// Numerical failure during training; carries the failing iteration.
class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, int iteration)
      : Error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace netlift

#endif  // NETLIFT_ERRORS_HPP_
