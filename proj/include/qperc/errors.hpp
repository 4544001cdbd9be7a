// Copyright 2026 The qperc developers
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

namespace qperc {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible shapes, or a dimension outside an operation's domain.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Carries a 1-based position; line 0 means the
/// input was a bare string rather than a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(compose(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  /// The bare description, without the position prefix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string compose(const std::string& message, std::size_t line,
                             std::size_t column) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", column " +
                                       std::to_string(column)
                                 : "column " + std::to_string(column);
    return "parse error at " + where + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// An input that makes the requested computation meaningless (e.g. the
/// pseudoinverse of a zero vector).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical procedure failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A lookup by name found nothing.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// The filesystem refused to cooperate.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qperc
