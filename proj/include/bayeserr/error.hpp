/*
 * Copyright 2026 The bayeserr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bayeserr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value is outside its domain (prior, cost, rate, NaN score).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed or incomplete score data. `line()` is 1-based, 0 when the
/// problem is not tied to a single line (e.g. a class with no trials).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The operation needs log-likelihood-ratio scores but got raw scores.
class NotCalibrated : public Error {
 public:
  using Error::Error;
};

}  // namespace bayeserr
