/*
 * Copyright 2026 The sparsehar Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace sparsehar {

// Base class for every error raised by the library. The CLI maps
// NumericalError to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix or vector shape disagrees with a FeatureLayout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Invalid user-provided data (non-finite values, bad labels, negative
// importance entries, violated preconditions).
class InputError : public Error {
 public:
  using Error::Error;
};

// Invalid hyperparameters or generator specifications.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. Carries the 1-based line number when known.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, long line)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message
                            : message),
        line_(line) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// A linear system that must be symmetric positive definite is not.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace sparsehar
