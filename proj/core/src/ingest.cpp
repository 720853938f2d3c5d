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

#include "polkg/ingest.hpp"

#include <set>

#include "polkg/error.hpp"
#include "polkg/query.hpp"
#include "polkg/vocabulary.hpp"

namespace polkg::ingest {
namespace {

namespace t = vocab::terms;

constexpr std::string_view kLocationByTime = R"(# Locations of the vessel in time order.
SELECT ?datetime ?location
WHERE {
  ex:fishingVessel bfo:occupies_spatial_region ?fishingVesselTrackPoint .
  ?fishingVesselTrackPoint bfo:spatial_part_of ?location .
  ?spatiotemporalInstant bfo:spatially_projects_onto ?fishingVesselTrackPoint .
  ?spatiotemporalInstant bfo:temporally_projects_onto ?temporalInstant .
  ?temporalInstant cco:has_datetime_value ?datetime .
}
ORDER BY ?datetime
)";

constexpr std::string_view kTransitions = R"(# Start and end location of every pair of consecutive trip parts.
SELECT ?startLocationOfFishingVessel ?endLocationOfFishingVessel
WHERE {
  ?fishingTripPart1 bfo:precedes ?fishingTripPart2 .
  ?fishingTripPart1 bfo:has_occurrent_part ?beingObserved1 .
  ?beingObserved1 bfo:occupies_spatiotemporal_region ?spatiotemporalInstant1 .
  ?spatiotemporalInstant1 bfo:spatially_projects_onto ?fishingVesselTrackPoint1 .
  ?fishingVesselTrackPoint1 bfo:spatial_part_of ?startLocationOfFishingVessel .
  ?fishingTripPart2 bfo:has_occurrent_part ?beingObserved2 .
  ?beingObserved2 bfo:occupies_spatiotemporal_region ?spatiotemporalInstant2 .
  ?spatiotemporalInstant2 bfo:spatially_projects_onto ?fishingVesselTrackPoint2 .
  ?fishingVesselTrackPoint2 bfo:spatial_part_of ?endLocationOfFishingVessel .
}
)";

// Transitions plus the start observation's time, used to order the pairs.
constexpr std::string_view kTimedTransitions = R"(
SELECT ?start ?end ?time
WHERE {
  ?part1 bfo:precedes ?part2 .
  ?part1 bfo:has_occurrent_part ?obs1 .
  ?obs1 bfo:occupies_spatiotemporal_region ?st1 .
  ?st1 bfo:spatially_projects_onto ?tp1 .
  ?tp1 bfo:spatial_part_of ?start .
  ?part2 bfo:has_occurrent_part ?obs2 .
  ?obs2 bfo:occupies_spatiotemporal_region ?st2 .
  ?st2 bfo:spatially_projects_onto ?tp2 .
  ?tp2 bfo:spatial_part_of ?end .
  ?st1 bfo:temporally_projects_onto ?ti1 .
  ?ti1 cco:has_datetime_value ?time .
}
ORDER BY ?time
)";

void ReplaceIri(query::Slot& slot, const rdf::Iri& from, const rdf::Iri& to) {
  if (auto* term = std::get_if<rdf::Term>(&slot)) {
    if (term->is_iri() && term->iri() == from) *term = rdf::Term(to);
  }
}

}  // namespace

IngestManifest::IngestManifest(IngestPolicy policy)
    : policy_(std::move(policy)),
      vessel_(vocab::Individual(policy_.prefix + policy_.vessel)),
      trip_(vocab::Individual(policy_.prefix + policy_.trip)) {}

rdf::Iri IngestManifest::Day(std::string_view stem, std::size_t day) const {
  return vocab::Individual(policy_.prefix + std::string(stem) + "_d" +
                           std::to_string(day));
}

rdf::Iri IngestManifest::TripPart(std::size_t day) const {
  return Day(policy_.trip + "Part", day);
}
rdf::Iri IngestManifest::Observation(std::size_t day) const {
  return Day("beingObserved", day);
}
rdf::Iri IngestManifest::SpatiotemporalInstant(std::size_t day) const {
  return Day("stInstant", day);
}
rdf::Iri IngestManifest::TemporalInstant(std::size_t day) const {
  return Day("tInstant", day);
}
rdf::Iri IngestManifest::TrackPoint(std::size_t day) const {
  return Day("trackPoint", day);
}

rdf::Iri IngestManifest::Location(std::string_view label) {
  return vocab::Individual(label);
}

std::string IngestManifest::LocationLabel(const rdf::Iri& iri) {
  const std::string& ns = vocab::ApplicationNamespace();
  const std::string& v = iri.value();
  return v.size() > ns.size() && v.starts_with(ns) ? v.substr(ns.size()) : v;
}

void IngestInto(rdf::Graph& g, std::span<const datagen::ObservationRow> rows,
                const IngestManifest& m) {
  if (rows.empty()) throw ValidationError("no observation rows to ingest");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!labels.insert(rows[i].day_label).second) {
      throw ValidationError("duplicate day label `" + rows[i].day_label + "`");
    }
    if (i > 0 && !(rows[i - 1].time < rows[i].time)) {
      throw ValidationError("times must strictly increase (row " +
                            std::to_string(i + 1) + ")");
    }
  }

  g.Insert(m.vessel(), t::Type(), t::Watercraft());
  g.Insert(m.vessel(), t::ParticipatesIn(), m.trip());
  g.Insert(m.trip(), t::Type(), t::Process());

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t day = i + 1;
    const rdf::Iri part = m.TripPart(day);
    const rdf::Iri obs = m.Observation(day);
    const rdf::Iri st = m.SpatiotemporalInstant(day);
    const rdf::Iri ti = m.TemporalInstant(day);
    const rdf::Iri tp = m.TrackPoint(day);
    const rdf::Iri loc = IngestManifest::Location(rows[i].location);

    g.Insert(part, t::Type(), t::Process());
    g.Insert(m.trip(), t::HasOccurrentPart(), part);
    g.Insert(part, t::HasOccurrentPart(), obs);
    g.Insert(obs, t::Type(), t::ProcessBoundary());
    g.Insert(obs, t::OccupiesSpatiotemporalRegion(), st);
    g.Insert(st, t::Type(), t::SpatiotemporalInstant());
    g.Insert(st, t::SpatiallyProjectsOnto(), tp);
    g.Insert(st, t::TemporallyProjectsOnto(), ti);
    g.Insert(ti, t::Type(), t::TemporalInstant());
    g.Insert(ti, t::HasDatetimeValue(), rdf::Literal::DateTimeValue(rows[i].time));
    g.Insert(tp, t::Type(), t::VehicleTrackPoint());
    g.Insert(tp, t::SpatialPartOf(), loc);
    g.Insert(m.vessel(), t::OccupiesSpatialRegion(), tp);
    g.Insert(loc, t::Type(), t::SpatialRegion());
    if (day > 1) g.Insert(m.TripPart(day - 1), t::Precedes(), part);
  }
}

rdf::Graph IngestRows(std::span<const datagen::ObservationRow> rows,
                      const IngestManifest& manifest) {
  rdf::Graph g;
  IngestInto(g, rows, manifest);
  return g;
}

std::string_view LocationByTimeQueryText() { return kLocationByTime; }
std::string_view TransitionsQueryText() { return kTransitions; }

std::vector<LocatedInstant> LocationSequence(const rdf::Graph& graph,
                                             const IngestManifest& manifest,
                                             SequenceDiagnostics* diagnostics) {
  const auto& prefixes = vocab::Vocabulary::Default().prefixes();
  query::QueryAst ast = query::ParseQuery(kLocationByTime, prefixes);
  const IngestManifest default_manifest;
  if (manifest.vessel() != default_manifest.vessel()) {
    for (auto& p : ast.patterns) {
      ReplaceIri(p.subject, default_manifest.vessel(), manifest.vessel());
    }
  }
  const query::SolutionTable table = query::Evaluate(ast, graph);

  std::vector<LocatedInstant> out;
  std::size_t dropped = 0;
  for (const auto& row : table.rows) {
    const rdf::Term& when = row[0];
    const rdf::Term& where = row[1];
    if (!when.is_literal() ||
        when.literal().datatype() != rdf::Datatype::kDateTime ||
        !where.is_iri()) {
      ++dropped;
      continue;
    }
    const DateTime time = when.literal().AsDateTime();
    if (!out.empty() && !(out.back().time < time)) {
      ++dropped;
      continue;
    }
    out.push_back({time, where.iri()});
  }
  if (diagnostics != nullptr) {
    const std::size_t instants =
        graph.Count(rdf::kAny, vocab::terms::HasDatetimeValue(), rdf::kAny);
    diagnostics->dropped_rows = dropped;
    diagnostics->unmatched_instants =
        instants > out.size() ? instants - out.size() : 0;
  }
  return out;
}

std::vector<std::pair<rdf::Iri, rdf::Iri>> TransitionPairs(
    const rdf::Graph& graph) {
  static const query::QueryAst ast = query::ParseQuery(
      kTimedTransitions, vocab::Vocabulary::Default().prefixes());
  const query::SolutionTable table = query::Evaluate(ast, graph);
  std::vector<std::pair<rdf::Iri, rdf::Iri>> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    if (!row[0].is_iri() || !row[1].is_iri()) continue;
    out.emplace_back(row[0].iri(), row[1].iri());
  }
  return out;
}

std::vector<std::string> LocationLabels(const rdf::Graph& graph,
                                        const IngestManifest& manifest) {
  std::vector<std::string> out;
  for (const LocatedInstant& li : LocationSequence(graph, manifest)) {
    out.push_back(IngestManifest::LocationLabel(li.location));
  }
  return out;
}

}  // namespace polkg::ingest
