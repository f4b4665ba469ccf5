// Copyright 2026 The kout Authors.
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

#ifndef KOUT_ERROR_HPP_
#define KOUT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kout {

// Invalid argument values (out of range, inconsistent combinations).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter values that are in range mathematically but excluded by the
// implementation, e.g. r = 1 for the alpha* solver.
class UnsupportedParameter : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Exhaustive algorithms refuse inputs above their size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed edge-list or config input. line() is 1-based, 0 when unknown.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace kout

#endif  // KOUT_ERROR_HPP_
