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

#ifndef POLKG_DOT_HPP_
#define POLKG_DOT_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "polkg/ingest.hpp"
#include "polkg/rdf.hpp"
#include "polkg/vocabulary.hpp"

namespace polkg::dot {

// Triples touching the individuals minted for `day`, plus the rdf:type
// triples of every IRI node they mention.
rdf::Graph DaySubgraph(const rdf::Graph& graph, std::size_t day,
                       const ingest::IngestManifest& manifest =
                           ingest::IngestManifest());

// Triples whose subject is a writeback individual (pattern of life and its
// parts, dispositions, count / total ICEs, PMICEs, predicted processes),
// plus the rdf:type triples of the IRI nodes they mention.
rdf::Graph WritebackSubgraph(const rdf::Graph& graph);

// Graphviz digraph, one node per IRI and one box node per literal
// occurrence; output order follows the sorted triples.
std::string ToDot(const rdf::Graph& graph, const vocab::PrefixTable& prefixes,
                  std::string_view title);

}  // namespace polkg::dot

#endif  // POLKG_DOT_HPP_
