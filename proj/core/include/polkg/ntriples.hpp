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

#ifndef POLKG_NTRIPLES_HPP_
#define POLKG_NTRIPLES_HPP_

#include <string>
#include <string_view>

#include "polkg/rdf.hpp"

namespace polkg::rdf {

// Parses line-oriented N-Triples: IRIs in angle brackets, literals quoted
// with an optional `^^<datatype>` from the supported xsd set. Blank lines
// and `#` comments are skipped. Throws ParseError naming the first bad line.
Graph ParseNTriples(std::string_view text);

// One line per triple in sorted order, each terminated by ` .\n`.
std::string SerializeNTriples(const Graph& graph);

}  // namespace polkg::rdf

#endif  // POLKG_NTRIPLES_HPP_
