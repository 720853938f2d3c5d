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

#include "polkg/vocabulary.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "polkg/error.hpp"

namespace polkg::vocab {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

constexpr std::string_view kBfo = "http://example.org/bfo/";
constexpr std::string_view kCco = "http://example.org/cco/";
constexpr std::string_view kEx = "http://example.org/pol/";
constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

struct TermSpec {
  const char* name;
  TermKind kind;
  const char* label;
  const char* definition;
};

// clang-format off
constexpr TermSpec kTermSpecs[] = {
  // Upstream classes.
  {"bfo:SpatiotemporalRegion", TermKind::kClass, "Spatiotemporal Region",
   "Occurrent that is a part of spacetime."},
  {"bfo:SpatialRegion", TermKind::kClass, "Spatial Region",
   "Continuant region of space; locations are typed with it."},
  {"bfo:TemporalRegion", TermKind::kClass, "Temporal Region",
   "Occurrent region of time."},
  {"bfo:TemporalInstant", TermKind::kClass, "Temporal Instant",
   "Zero-dimensional temporal region."},
  {"bfo:Process", TermKind::kClass, "Process",
   "Occurrent with temporal parts and at least one material participant."},
  {"bfo:ProcessBoundary", TermKind::kClass, "Process Boundary",
   "Temporal part of a process that has no proper temporal part."},
  {"bfo:History", TermKind::kClass, "History",
   "Sum of the processes in the region a material entity occupies."},
  {"cco:ProcessProfile", TermKind::kClass, "Process Profile",
   "Occurrent part of a process individuated by how some attribute of a "
   "participant changes."},
  {"cco:Watercraft", TermKind::kClass, "Watercraft",
   "Vehicle for travel on water."},
  {"cco:ProbabilityMeasurementICE", TermKind::kClass,
   "Probability Measurement Information Content Entity",
   "Measurement information content entity carrying a probability."},
  {"cco:VehicleTrackPoint", TermKind::kClass, "Vehicle Track Point",
   "Point region where a vehicle is or was during some motion."},
  {"bfo:Disposition", TermKind::kClass, "Disposition",
   "Realizable entity grounded in the physical make-up of its bearer."},
  // Application classes.
  {"ex:SpatiotemporalInstant", TermKind::kClass, "Spatiotemporal Instant",
   "Spatiotemporal region whose spatial projection is a point and whose "
   "temporal projection is an instant."},
  {"ex:MagnitudeProcessProfile", TermKind::kClass,
   "Magnitude Process Profile",
   "Process profile tracking the amount of change in an attribute."},
  {"ex:RateProcessProfile", TermKind::kClass, "Rate Process Profile",
   "Process profile tracking change in an attribute per unit of time."},
  {"ex:PatternProcessProfile", TermKind::kClass, "Pattern Process Profile",
   "Process profile tracking a regular pattern of change in an attribute."},
  {"ex:PatternOfLife", TermKind::kClass, "Pattern of Life",
   "Pattern process profile over realizations of realizable entities of "
   "the participants."},
  {"ex:MarkovPMICE", TermKind::kClass,
   "Markov Probability Measurement Information Content Entity",
   "Probability measurement computed under the Markov property."},
  {"ex:TransitionCountICE", TermKind::kClass, "Transition Count",
   "Number of observed realizations of one transition disposition."},
  {"ex:TransitionTotalICE", TermKind::kClass, "Transition Total",
   "Sum of the transition counts sharing an origin state."},
  // Object properties.
  {"rdf:type", TermKind::kObjectProperty, "type",
   "Relates an individual to its class."},
  {"bfo:precedes", TermKind::kObjectProperty, "precedes",
   "o precedes o' when o ends no later than o' begins."},
  {"bfo:has_occurrent_part", TermKind::kObjectProperty, "has occurrent part",
   "Inverse of occurrent part of."},
  {"bfo:occurrent_part_of", TermKind::kObjectProperty, "occurrent part of",
   "Parthood between occurrents."},
  {"bfo:has_temporal_part", TermKind::kObjectProperty, "has temporal part",
   "Parthood restricted to whole temporal slices."},
  {"bfo:occupies_spatial_region", TermKind::kObjectProperty,
   "occupies spatial region",
   "Relates an independent continuant to the region it occupies."},
  {"bfo:occupies_spatiotemporal_region", TermKind::kObjectProperty,
   "occupies spatiotemporal region",
   "Relates a process or process boundary to its spatiotemporal extent."},
  {"bfo:spatially_projects_onto", TermKind::kObjectProperty,
   "spatially projects onto",
   "Relates a spatiotemporal region to its spatial extent at a time."},
  {"bfo:temporally_projects_onto", TermKind::kObjectProperty,
   "temporally projects onto",
   "Relates a spatiotemporal region to its temporal extent."},
  {"bfo:spatial_part_of", TermKind::kObjectProperty, "spatial part of",
   "Parthood between immaterial spatial entities."},
  {"bfo:participates_in", TermKind::kObjectProperty, "participates in",
   "Relates a continuant to a process it takes part in."},
  {"bfo:inheres_in", TermKind::kObjectProperty, "inheres in",
   "Relates a dependent continuant to its bearer."},
  {"bfo:realizes", TermKind::kObjectProperty, "realizes",
   "Relates a process to the realizable entity it realizes."},
  {"bfo:history_of", TermKind::kObjectProperty, "history of",
   "Relates a history to its unique material entity."},
  {"cco:is_a_measurement_of", TermKind::kObjectProperty,
   "is a measurement of",
   "Relates a measurement content entity to the entity it measures."},
  {"cco:is_about", TermKind::kObjectProperty, "is about",
   "Relates an information content entity to its subject."},
  {"ex:modally_about", TermKind::kObjectProperty, "modally about",
   "Relates an information content entity to a process that has not "
   "occurred."},
  {"ex:transition_from", TermKind::kObjectProperty, "transition from",
   "Origin location of the transition a profile part or measurement "
   "concerns."},
  {"ex:transition_to", TermKind::kObjectProperty, "transition to",
   "Destination location of the transition a profile part or measurement "
   "concerns."},
  // Data properties.
  {"cco:has_datetime_value", TermKind::kDataProperty, "has datetime value",
   "Datetime value of a temporal instant; range xsd:dateTime."},
  {"cco:has_decimal_value", TermKind::kDataProperty, "has decimal value",
   "Decimal value of a measurement."},
  {"cco:has_integer_value", TermKind::kDataProperty, "has integer value",
   "Integer value of a measurement."},
  {"cco:measurement_annotation", TermKind::kDataProperty,
   "measurement annotation",
   "Measurement value of a quality, realizable or process profile."},
  {"ex:predicted", TermKind::kDataProperty, "predicted",
   "Marks a process that has not occurred yet."},
};
// clang-format on

}  // namespace

std::string_view TermKindName(TermKind kind) {
  switch (kind) {
    case TermKind::kClass: return "class";
    case TermKind::kObjectProperty: return "object-property";
    case TermKind::kDataProperty: return "data-property";
  }
  return "class";
}

PrefixTable PrefixTable::Default() {
  PrefixTable t;
  t.Add("bfo", std::string(kBfo));
  t.Add("cco", std::string(kCco));
  t.Add("ex", std::string(kEx));
  t.Add("xsd", std::string(rdf::kXsdNamespace));
  t.Add("rdf", std::string(kRdf));
  t.AddAlias(t.Resolve("cco:spatial_part_of"), t.Resolve("bfo:spatial_part_of"));
  t.AddAlias(t.Resolve("bfo:has_occurent_part"),
             t.Resolve("bfo:has_occurrent_part"));
  return t;
}

void PrefixTable::Add(std::string prefix, std::string namespace_iri) {
  if (prefix.find(':') != std::string::npos) {
    throw ValidationError("prefix `" + prefix + "` must not contain `:`");
  }
  rdf::Iri check(namespace_iri);
  std::string key = Lower(prefix);
  prefixes_[std::move(key)] = {std::move(prefix), std::move(namespace_iri)};
}

void PrefixTable::AddAlias(const rdf::Iri& from, const rdf::Iri& to) {
  aliases_[from.value()] = to.value();
}

std::optional<std::string> PrefixTable::Namespace(
    std::string_view prefix) const {
  auto it = prefixes_.find(Lower(prefix));
  if (it == prefixes_.end()) return std::nullopt;
  return it->second.second;
}

rdf::Iri PrefixTable::Resolve(std::string_view name) const {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("`" + std::string(name) +
                          "` is not a prefixed name");
  }
  const std::string_view prefix = name.substr(0, colon);
  auto ns = Namespace(prefix);
  if (!ns) throw ResolutionError(std::string(prefix));
  return Canonical(rdf::Iri(*ns + std::string(name.substr(colon + 1))));
}

rdf::Iri PrefixTable::Canonical(const rdf::Iri& iri) const {
  auto it = aliases_.find(iri.value());
  return it == aliases_.end() ? iri : rdf::Iri(it->second);
}

std::optional<std::string> PrefixTable::Compact(const rdf::Iri& iri) const {
  std::optional<std::string> best;
  std::size_t best_len = 0;
  for (const auto& [key, entry] : prefixes_) {
    const auto& [spelling, ns] = entry;
    if (iri.value().size() > ns.size() && iri.value().starts_with(ns) &&
        ns.size() > best_len) {
      best = spelling + ":" + iri.value().substr(ns.size());
      best_len = ns.size();
    }
  }
  return best;
}

std::vector<std::pair<std::string, std::string>> PrefixTable::Prefixes()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, entry] : prefixes_) out.push_back(entry);
  return out;
}

Vocabulary::Vocabulary(PrefixTable prefixes, std::vector<VocabTerm> terms)
    : prefixes_(std::move(prefixes)), terms_(std::move(terms)) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const VocabTerm& t = terms_[i];
    if (!names.insert(t.prefixed_name).second) {
      throw ValidationError("duplicate vocabulary term " + t.prefixed_name);
    }
    if (!by_iri_.emplace(t.iri.value(), i).second) {
      throw ValidationError("duplicate vocabulary IRI <" + t.iri.value() +
                            ">");
    }
  }
}

const Vocabulary& Vocabulary::Default() {
  static const Vocabulary v = [] {
    PrefixTable prefixes = PrefixTable::Default();
    std::vector<VocabTerm> terms;
    for (const TermSpec& s : kTermSpecs) {
      terms.push_back({s.name, prefixes.Resolve(s.name), s.kind, s.label,
                       s.definition});
    }
    return Vocabulary(std::move(prefixes), std::move(terms));
  }();
  return v;
}

const VocabTerm* Vocabulary::Find(const rdf::Iri& iri) const {
  auto it = by_iri_.find(iri.value());
  return it == by_iri_.end() ? nullptr : &terms_[it->second];
}

const VocabTerm* Vocabulary::FindByLabel(std::string_view label) const {
  for (const VocabTerm& t : terms_) {
    if (t.label == label) return &t;
  }
  return nullptr;
}

rdf::Iri Vocabulary::Term(std::string_view prefixed_name) const {
  rdf::Iri iri = prefixes_.Resolve(prefixed_name);
  if (!Contains(iri)) {
    throw ValidationError("`" + std::string(prefixed_name) +
                          "` is not a vocabulary term");
  }
  return iri;
}

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto tab = line.find('\t');
    out.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return out;
}

}  // namespace

Vocabulary Vocabulary::FromManifest(std::string_view text) {
  PrefixTable prefixes;
  std::vector<std::pair<std::string, std::string>> aliases;
  struct Pending {
    std::size_t line;
    std::string name;
    TermKind kind;
    std::string label;
    std::string definition;
  };
  std::vector<Pending> pending;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = SplitTabs(line);
    const std::string_view kind = fields[0];
    try {
      if (kind == "prefix" && fields.size() == 3) {
        prefixes.Add(std::string(fields[1]), std::string(fields[2]));
      } else if (kind == "alias" && fields.size() == 3) {
        aliases.emplace_back(fields[1], fields[2]);
      } else if ((kind == "class" || kind == "object-property" ||
                  kind == "data-property") &&
                 fields.size() == 4) {
        const TermKind k = kind == "class"             ? TermKind::kClass
                           : kind == "object-property" ? TermKind::kObjectProperty
                                                       : TermKind::kDataProperty;
        pending.push_back({line_no, std::string(fields[1]), k,
                           std::string(fields[2]), std::string(fields[3])});
      } else {
        throw ParseError(line_no, 0,
                         "unrecognised manifest record `" + std::string(kind) +
                             "` with " + std::to_string(fields.size()) +
                             " fields");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ParseError(line_no, 0, e.what());
    }
  }

  for (const auto& [from, to] : aliases) {
    prefixes.AddAlias(prefixes.Resolve(from), prefixes.Resolve(to));
  }
  std::vector<VocabTerm> terms;
  for (Pending& p : pending) {
    try {
      rdf::Iri iri = prefixes.Resolve(p.name);
      terms.push_back({std::move(p.name), std::move(iri), p.kind,
                       std::move(p.label), std::move(p.definition)});
    } catch (const ValidationError& e) {
      throw ParseError(p.line, 0, e.what());
    }
  }
  return Vocabulary(std::move(prefixes), std::move(terms));
}

std::string Vocabulary::ToManifest() const {
  std::string out = "# polkg vocabulary manifest\n";
  for (const auto& [prefix, ns] : prefixes_.Prefixes()) {
    out += "prefix\t" + prefix + "\t" + ns + "\n";
  }
  for (const auto& [from, to] : prefixes_.Aliases()) {
    out += "alias\t" + prefixes_.Compact(rdf::Iri(from)).value_or(from) +
           "\t" + prefixes_.Compact(rdf::Iri(to)).value_or(to) + "\n";
  }
  for (const VocabTerm& t : terms_) {
    out += std::string(TermKindName(t.kind)) + "\t" + t.prefixed_name + "\t" +
           t.label + "\t" + t.definition + "\n";
  }
  return out;
}

const std::vector<VocabTerm>& RequiredTerms() {
  return Vocabulary::Default().terms();
}

const std::string& ApplicationNamespace() {
  static const std::string ns(kEx);
  return ns;
}

rdf::Iri Individual(std::string_view local_name) {
  return rdf::Iri(ApplicationNamespace() + std::string(local_name));
}

namespace terms {

#define POLKG_TERM(fn, name)                                         \
  const rdf::Iri& fn() {                                             \
    static const rdf::Iri iri = Vocabulary::Default().Term(name);    \
    return iri;                                                      \
  }

POLKG_TERM(Type, "rdf:type")
POLKG_TERM(Predicted, "ex:predicted")
POLKG_TERM(Process, "bfo:Process")
POLKG_TERM(ProcessBoundary, "bfo:ProcessBoundary")
POLKG_TERM(SpatialRegion, "bfo:SpatialRegion")
POLKG_TERM(TemporalInstant, "bfo:TemporalInstant")
POLKG_TERM(SpatiotemporalInstant, "ex:SpatiotemporalInstant")
POLKG_TERM(VehicleTrackPoint, "cco:VehicleTrackPoint")
POLKG_TERM(Watercraft, "cco:Watercraft")
POLKG_TERM(Disposition, "bfo:Disposition")
POLKG_TERM(PatternProcessProfile, "ex:PatternProcessProfile")
POLKG_TERM(PatternOfLife, "ex:PatternOfLife")
POLKG_TERM(MarkovPmice, "ex:MarkovPMICE")
POLKG_TERM(TransitionCountIce, "ex:TransitionCountICE")
POLKG_TERM(TransitionTotalIce, "ex:TransitionTotalICE")
POLKG_TERM(Precedes, "bfo:precedes")
POLKG_TERM(HasOccurrentPart, "bfo:has_occurrent_part")
POLKG_TERM(OccurrentPartOf, "bfo:occurrent_part_of")
POLKG_TERM(OccupiesSpatiotemporalRegion, "bfo:occupies_spatiotemporal_region")
POLKG_TERM(OccupiesSpatialRegion, "bfo:occupies_spatial_region")
POLKG_TERM(SpatiallyProjectsOnto, "bfo:spatially_projects_onto")
POLKG_TERM(TemporallyProjectsOnto, "bfo:temporally_projects_onto")
POLKG_TERM(SpatialPartOf, "bfo:spatial_part_of")
POLKG_TERM(HasDatetimeValue, "cco:has_datetime_value")
POLKG_TERM(HasDecimalValue, "cco:has_decimal_value")
POLKG_TERM(HasIntegerValue, "cco:has_integer_value")
POLKG_TERM(ParticipatesIn, "bfo:participates_in")
POLKG_TERM(InheresIn, "bfo:inheres_in")
POLKG_TERM(Realizes, "bfo:realizes")
POLKG_TERM(IsAMeasurementOf, "cco:is_a_measurement_of")
POLKG_TERM(ModallyAbout, "ex:modally_about")
POLKG_TERM(TransitionFrom, "ex:transition_from")
POLKG_TERM(TransitionTo, "ex:transition_to")

#undef POLKG_TERM

}  // namespace terms
}  // namespace polkg::vocab
