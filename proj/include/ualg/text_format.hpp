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

// Plain-text algebra files:
//
//   algebra z2
//   size 2
//   op add 2
//   0 1
//   1 0
//   const zero 0
//   top 0
//   end
//
// Tables are row-major with the leftmost argument slowest and may be split
// across lines freely. '#' starts a comment.

#pragma once

#include <string>
#include <string_view>

#include "ualg/algebra.hpp"

namespace ualg {

/// Throws ParseError for syntax errors and ValueOutOfRange (with the
/// line:column of the entry) for out-of-range values.
FiniteAlgebra parse_algebra(std::string_view text);

/// Canonical form: one table row (last argument varying) per line.
std::string render_algebra(const FiniteAlgebra& a);

/// Reads and parses a file; throws Error if it cannot be read.
FiniteAlgebra load_algebra_file(const std::string& path);

}  // namespace ualg
