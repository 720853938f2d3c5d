// Copyright 2026 The polkg Authors
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

#ifndef POLKG_ERROR_HPP_
#define POLKG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polkg {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a type invariant or an operation precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : ValidationError(Format(line, column, reason)),
        line_(line),
        column_(column),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  static std::string Format(std::size_t line, std::size_t column,
                            const std::string& reason) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + reason;
  }

  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

// A prefixed name used a prefix the table does not know.
class ResolutionError : public ValidationError {
 public:
  explicit ResolutionError(const std::string& prefix)
      : ValidationError("unknown prefix `" + prefix + "`"), prefix_(prefix) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

// A lookup found nothing (e.g. probabilities read before any writeback).
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace polkg

#endif  // POLKG_ERROR_HPP_
