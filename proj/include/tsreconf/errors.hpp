// Copyright 2026 The tsreconf Authors
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

#ifndef TSRECONF_ERRORS_HPP_
#define TSRECONF_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsr {

// Malformed or semantically invalid input: bad ids, broken graph invariants,
// seeds that are not target sets, parameters out of range.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Syntax error in one of the text formats. `line()` is 1-based; 0 means the
// error is not tied to a particular line (e.g. a missing header).
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InvalidInput(line == 0 ? message
                               : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exact search was asked to run on an instance beyond its configured
// vertex limit.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tsr

#endif  // TSRECONF_ERRORS_HPP_
