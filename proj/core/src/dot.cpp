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

#include "polkg/dot.hpp"

#include <map>
#include <set>

#include "polkg/query.hpp"

namespace polkg::dot {
namespace {

namespace t = vocab::terms;

void AddTypes(const rdf::Graph& source, rdf::Graph& out) {
  std::set<rdf::Iri> nodes;
  for (const rdf::Triple& tr : out) {
    nodes.insert(tr.subject());
    if (tr.object().is_iri() && tr.predicate() != t::Type()) {
      nodes.insert(tr.object().iri());
    }
  }
  for (const rdf::Iri& n : nodes) {
    for (rdf::Triple& tr : source.Match(n, t::Type(), rdf::kAny)) {
      out.Insert(std::move(tr));
    }
  }
}

std::string Quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

rdf::Graph DaySubgraph(const rdf::Graph& graph, std::size_t day,
                       const ingest::IngestManifest& m) {
  const std::set<rdf::Iri> members = {
      m.TripPart(day), m.Observation(day), m.SpatiotemporalInstant(day),
      m.TemporalInstant(day), m.TrackPoint(day)};
  rdf::Graph out;
  for (const rdf::Iri& iri : members) {
    for (rdf::Triple& tr : graph.Match(iri, rdf::kAny, rdf::kAny)) {
      out.Insert(std::move(tr));
    }
    for (rdf::Triple& tr : graph.Match(rdf::kAny, rdf::kAny, rdf::Term(iri))) {
      out.Insert(std::move(tr));
    }
  }
  AddTypes(graph, out);
  return out;
}

rdf::Graph WritebackSubgraph(const rdf::Graph& graph) {
  const rdf::Iri classes[] = {t::MarkovPmice(),        t::PatternOfLife(),
                              t::PatternProcessProfile(), t::Disposition(),
                              t::TransitionCountIce(), t::TransitionTotalIce()};
  std::set<rdf::Iri> subjects;
  for (const rdf::Iri& c : classes) {
    for (const rdf::Triple& tr : graph.Match(rdf::kAny, t::Type(), rdf::Term(c))) {
      subjects.insert(tr.subject());
    }
  }
  for (const rdf::Triple& tr : graph.Match(rdf::kAny, t::Predicted(), rdf::kAny)) {
    subjects.insert(tr.subject());
  }
  rdf::Graph out;
  for (const rdf::Iri& s : subjects) {
    for (rdf::Triple& tr : graph.Match(s, rdf::kAny, rdf::kAny)) {
      out.Insert(std::move(tr));
    }
  }
  // Historical trip parts realizing dispositions.
  for (rdf::Triple& tr : graph.Match(rdf::kAny, t::Realizes(), rdf::kAny)) {
    out.Insert(std::move(tr));
  }
  AddTypes(graph, out);
  return out;
}

std::string ToDot(const rdf::Graph& graph, const vocab::PrefixTable& prefixes,
                  std::string_view title) {
  std::map<std::string, std::string> ids;
  std::string nodes;
  std::string edges;
  std::size_t literal_count = 0;

  auto node = [&](const rdf::Term& term) -> std::string {
    const std::string label = query::DisplayTerm(term, prefixes);
    if (term.is_literal()) {
      const std::string id = "lit" + std::to_string(literal_count++);
      nodes += "  " + id + " [shape=box, label=" + Quote(label) + "];\n";
      return id;
    }
    auto [it, inserted] =
        ids.emplace(term.ToNTriples(), "n" + std::to_string(ids.size()));
    if (inserted) {
      nodes += "  " + it->second + " [label=" + Quote(label) + "];\n";
    }
    return it->second;
  };

  for (const rdf::Triple& tr : graph) {
    const std::string s = node(tr.subject_term());
    const std::string o = node(tr.object());
    const std::string p =
        prefixes.Compact(tr.predicate()).value_or(tr.predicate().value());
    edges += "  " + s + " -> " + o + " [label=" + Quote(p) + "];\n";
  }
  return "digraph " + Quote(title) +
         " {\n  rankdir=LR;\n  node [shape=ellipse, fontname=\"Helvetica\"];\n"
         "  edge [fontname=\"Helvetica\", fontsize=10];\n" +
         nodes + edges + "}\n";
}

}  // namespace polkg::dot
