// Copyright 2026 The qssl Authors
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

#include <stdexcept>
#include <string>

namespace qssl {

/// Base class of every error raised by the library. The error kind is part
/// of the type so callers can dispatch on it; `what()` carries the detail.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Requested size exceeds what the dense simulator supports.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Qubit, node or sample index out of range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// Argument violates a documented precondition.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Dimensions of two operands do not agree.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// A numerical procedure broke down (singular system, non-finite cost, ...).
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// Malformed input file. Carries the offending 1-based line number.
class ParseError : public Error {
  public:
    ParseError(const std::string &path, std::size_t line, const std::string &msg)
        : Error(path + ":" + std::to_string(line) + ": " + msg), line_{line} {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Unknown dataset or configuration key.
class LookupError : public Error {
  public:
    using Error::Error;
};

/// Filesystem or network failure; message includes the path or URL.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace qssl
