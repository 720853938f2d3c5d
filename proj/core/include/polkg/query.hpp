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

#ifndef POLKG_QUERY_HPP_
#define POLKG_QUERY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polkg/rdf.hpp"
#include "polkg/vocabulary.hpp"

namespace polkg::query {

// A query variable; `name` keeps its leading `?`.
struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

using Slot = std::variant<Variable, rdf::Term>;

// Subject and predicate slots hold IRIs or variables; the object slot may
// also hold a literal.
struct TriplePattern {
  Slot subject;
  Slot predicate;
  Slot object;
};

struct QueryAst {
  std::vector<std::string> projection;
  std::vector<TriplePattern> patterns;
  std::optional<std::string> order_by;
};

struct SolutionTable {
  std::vector<std::string> header;
  std::vector<std::vector<rdf::Term>> rows;
};

// Parses `[PREFIX p: <ns>]* SELECT ?v... WHERE { bgp } [ORDER BY ?v]`.
// Prefixed names go through `prefixes` (case-insensitive, with aliases);
// in-query PREFIX declarations extend a local copy. `a` abbreviates
// rdf:type, and `;` / `,` abbreviate repeated subjects and predicates.
// Throws ParseError (with line and column), ResolutionError, or
// ValidationError when a projected variable occurs in no pattern.
QueryAst ParseQuery(std::string_view text, const vocab::PrefixTable& prefixes);

// Natural join of the pattern matches, evaluated left to right, projected
// onto `ast.projection` with bag semantics. Rows are sorted by the ORDER BY
// variable when present (ties by the whole row), otherwise by the whole
// row; comparisons use N-Triples serializations.
SolutionTable Evaluate(const QueryAst& ast, const rdf::Graph& graph);

// Human-oriented rendering: application individuals by local name, other
// IRIs as prefixed names when possible, dateTimes as `YYYY-MM-DD hh:mm:ss`,
// other literals by lexical form.
std::string DisplayTerm(const rdf::Term& term,
                        const vocab::PrefixTable& prefixes);
std::string FormatCsv(const SolutionTable& table,
                      const vocab::PrefixTable& prefixes);
std::string FormatText(const SolutionTable& table,
                       const vocab::PrefixTable& prefixes);

}  // namespace polkg::query

#endif  // POLKG_QUERY_HPP_
