// Copyright 2026 The hevqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hevqe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit or mode count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Problem too large for a dense representation.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. The message carries source and line context.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Integrals that break the required permutation symmetry.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// A qubit expected to carry a Z2 symmetry has off-diagonal support.
class NotASymmetryError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hevqe
