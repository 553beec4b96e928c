// Copyright 2026 The bidual authors
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

#ifndef BIDUAL_PROBLEM_IO_HPP
#define BIDUAL_PROBLEM_IO_HPP

#include <stdexcept>
#include <string>

#include "bidual/problem.hpp"

namespace bidual {

// Raised for unreadable files, malformed JSON (message keeps the parser's
// line/column diagnostic), missing or mistyped fields (message names the
// field), and instances that fail validation after assembly.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
};

// Problem-file schema, one JSON object:
//   {"m", "n", "A" (row-major array of rows), "b", "blocks" (sizes),
//    "alpha", "beta", "M" (positive number or "conservative"),
//    "mode" ("entry"|"group"|"mixed", optional), "gamma" (optional)}
// A preset "mode" overrides alpha/beta; without it both are required and the
// instance is tagged as free-form weighted. "mixed" requires "gamma" and the
// trailing identity error block.
ProblemInstance parse_problem_json(const std::string& text);

ProblemInstance load_problem_file(const std::string& path);

// Inverse of parse_problem_json; numeric fields survive a round trip
// bit-for-bit.
std::string problem_to_json(const ProblemInstance& instance);

}  // namespace bidual

#endif  // BIDUAL_PROBLEM_IO_HPP
