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

#ifndef POLKG_MATRIX_IO_HPP_
#define POLKG_MATRIX_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "polkg/markov.hpp"

namespace polkg::markov {

inline constexpr int kMatrixFormatVersion = 1;

// Contents of a matrix file. Exactly one of `first` / `second` is set,
// matching `order`; the counts it was estimated from are optional.
struct MatrixFile {
  int order = 1;
  std::optional<TransitionMatrix> first;
  std::optional<SecondOrderMatrix> second;
  std::optional<TransitionCounts> counts;
  std::optional<PairCounts> pair_counts;
};

// JSON document:
//   {"format": 1, "order": 1 | 2, "states": [...],
//    "rows": [[prev, cur], ...]            (order 2 only),
//    "values": [[...], ...]                (row-major),
//    "row_status": ["observed" | "unobserved", ...],
//    "row_sum_tolerance": 0.002            (only when not the default),
//    "counts": [[...], ...]                (optional)}
std::string ToJson(const TransitionMatrix& m,
                   const TransitionCounts* counts = nullptr);
std::string ToJson(const SecondOrderMatrix& m,
                   const PairCounts* counts = nullptr);

// Throws ParseError for malformed JSON or a wrong layout and
// ValidationError when the values break the matrix invariants.
MatrixFile MatrixFromJson(std::string_view text);

}  // namespace polkg::markov

#endif  // POLKG_MATRIX_IO_HPP_
