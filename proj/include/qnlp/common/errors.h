// Copyright 2026 The qnlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnlp {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed textual input. line() is 1-based, or 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A request exceeds a fixed bound (register width, solver size, codewords).
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& message) : Error(message) {}
};

// Arguments violate an operation precondition.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message) : Error(message) {}
};

// A projection whose outcome has (numerically) zero probability.
class ZeroNormError : public Error {
 public:
  ZeroNormError(const std::string& message, double probability)
      : Error(message), probability_(probability) {}

  double probability() const { return probability_; }

 private:
  double probability_;
};

// A token or label could not be resolved against a basis.
class ResolutionError : public Error {
 public:
  explicit ResolutionError(const std::string& message) : Error(message) {}
};

}  // namespace qnlp
