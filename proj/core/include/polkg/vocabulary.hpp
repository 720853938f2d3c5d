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

#ifndef POLKG_VOCABULARY_HPP_
#define POLKG_VOCABULARY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polkg/rdf.hpp"

namespace polkg::vocab {

// Prefix -> namespace table. Prefix lookup ignores ASCII case, so `Bfo:x`
// and `bfo:x` resolve to the same IRI. The table also carries term
// aliases, applied after prefix expansion, that map variant spellings onto
// one canonical IRI.
class PrefixTable {
 public:
  PrefixTable() = default;

  // bfo, cco, ex, xsd and rdf with the canonical aliases.
  static PrefixTable Default();

  void Add(std::string prefix, std::string namespace_iri);
  void AddAlias(const rdf::Iri& from, const rdf::Iri& to);

  std::optional<std::string> Namespace(std::string_view prefix) const;

  // `prefix:local` -> IRI. Throws ResolutionError for unknown prefixes and
  // ValidationError when `name` has no colon.
  rdf::Iri Resolve(std::string_view name) const;
  rdf::Iri Canonical(const rdf::Iri& iri) const;

  // Shortest `prefix:local` form, or nullopt if no namespace matches.
  std::optional<std::string> Compact(const rdf::Iri& iri) const;

  // Prefixes in their registered spelling, sorted.
  std::vector<std::pair<std::string, std::string>> Prefixes() const;
  const std::map<std::string, std::string>& Aliases() const {
    return aliases_;
  }

 private:
  // Lower-cased prefix -> (original spelling, namespace).
  std::map<std::string, std::pair<std::string, std::string>> prefixes_;
  std::map<std::string, std::string> aliases_;
};

inline rdf::Iri Resolve(const PrefixTable& table, std::string_view name) {
  return table.Resolve(name);
}

enum class TermKind { kClass, kObjectProperty, kDataProperty };

std::string_view TermKindName(TermKind kind);

struct VocabTerm {
  std::string prefixed_name;
  rdf::Iri iri;
  TermKind kind;
  std::string label;
  std::string definition;
};

// The closed set of classes and properties the toolkit emits or queries.
class Vocabulary {
 public:
  Vocabulary(PrefixTable prefixes, std::vector<VocabTerm> terms);

  // Built-in vocabulary. Local names are human-readable and do not follow
  // the numeric OBO identifiers of the upstream ontologies.
  static const Vocabulary& Default();

  // Line-oriented manifest: tab-separated `prefix`, `alias`, `class`,
  // `object-property` and `data-property` records; `#` starts a comment.
  static Vocabulary FromManifest(std::string_view text);
  std::string ToManifest() const;

  const PrefixTable& prefixes() const { return prefixes_; }
  const std::vector<VocabTerm>& terms() const { return terms_; }

  const VocabTerm* Find(const rdf::Iri& iri) const;
  const VocabTerm* FindByLabel(std::string_view label) const;
  bool Contains(const rdf::Iri& iri) const { return Find(iri) != nullptr; }

  // Resolves `name` and requires the result to be a vocabulary term.
  rdf::Iri Term(std::string_view prefixed_name) const;

 private:
  PrefixTable prefixes_;
  std::vector<VocabTerm> terms_;
  std::map<std::string, std::size_t> by_iri_;
};

// All terms of the default vocabulary.
const std::vector<VocabTerm>& RequiredTerms();

// Frequently used IRIs of the default vocabulary.
namespace terms {

const rdf::Iri& Type();
const rdf::Iri& Predicted();

// Classes.
const rdf::Iri& Process();
const rdf::Iri& ProcessBoundary();
const rdf::Iri& SpatialRegion();
const rdf::Iri& TemporalInstant();
const rdf::Iri& SpatiotemporalInstant();
const rdf::Iri& VehicleTrackPoint();
const rdf::Iri& Watercraft();
const rdf::Iri& Disposition();
const rdf::Iri& PatternProcessProfile();
const rdf::Iri& PatternOfLife();
const rdf::Iri& MarkovPmice();
const rdf::Iri& TransitionCountIce();
const rdf::Iri& TransitionTotalIce();

// Properties.
const rdf::Iri& Precedes();
const rdf::Iri& HasOccurrentPart();
const rdf::Iri& OccurrentPartOf();
const rdf::Iri& OccupiesSpatiotemporalRegion();
const rdf::Iri& OccupiesSpatialRegion();
const rdf::Iri& SpatiallyProjectsOnto();
const rdf::Iri& TemporallyProjectsOnto();
const rdf::Iri& SpatialPartOf();
const rdf::Iri& HasDatetimeValue();
const rdf::Iri& HasDecimalValue();
const rdf::Iri& HasIntegerValue();
const rdf::Iri& ParticipatesIn();
const rdf::Iri& InheresIn();
const rdf::Iri& Realizes();
const rdf::Iri& IsAMeasurementOf();
const rdf::Iri& ModallyAbout();
const rdf::Iri& TransitionFrom();
const rdf::Iri& TransitionTo();

}  // namespace terms

// Application namespace for individuals (`ex:`).
const std::string& ApplicationNamespace();
rdf::Iri Individual(std::string_view local_name);

}  // namespace polkg::vocab

#endif  // POLKG_VOCABULARY_HPP_
