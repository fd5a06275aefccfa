// Copyright 2026 The ualg Authors
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

namespace ualg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error { using Error::Error; };
class ValueOutOfRange : public Error { using Error::Error; };
class DuplicateSymbol : public Error { using Error::Error; };
class UnknownSymbol : public Error { using Error::Error; };
class UnboundVariable : public Error { using Error::Error; };
class SizeOverflow : public Error { using Error::Error; };
class SizeMismatch : public Error { using Error::Error; };
class MissingTop : public Error { using Error::Error; };
class AxiomViolation : public Error { using Error::Error; };
class InvalidPrimeList : public Error { using Error::Error; };
class CarrierTooLarge : public Error { using Error::Error; };
class UnknownSuite : public Error { using Error::Error; };

/// Syntax error in the algebra text format; carries a 1-based location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ualg
