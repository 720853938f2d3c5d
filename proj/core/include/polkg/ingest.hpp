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

#ifndef POLKG_INGEST_HPP_
#define POLKG_INGEST_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polkg/datagen.hpp"
#include "polkg/datetime.hpp"
#include "polkg/rdf.hpp"

namespace polkg::ingest {

// Naming knobs for one vessel. `prefix` is prepended to every minted local
// name except locations, so several vessels can share one graph.
struct IngestPolicy {
  std::string vessel = "fishingVessel";
  std::string trip = "fishingTrip";
  std::string prefix;
};

// Stable IRIs of the individuals minted for one vessel:
//   ex:fishingVessel, ex:fishingTrip, ex:fishingTripPart_d{N},
//   ex:beingObserved_d{N}, ex:stInstant_d{N}, ex:tInstant_d{N},
//   ex:trackPoint_d{N}, and ex:{location label} for locations.
class IngestManifest {
 public:
  IngestManifest() : IngestManifest(IngestPolicy{}) {}
  explicit IngestManifest(IngestPolicy policy);

  const rdf::Iri& vessel() const { return vessel_; }
  const rdf::Iri& trip() const { return trip_; }
  const IngestPolicy& policy() const { return policy_; }

  rdf::Iri TripPart(std::size_t day) const;
  rdf::Iri Observation(std::size_t day) const;
  rdf::Iri SpatiotemporalInstant(std::size_t day) const;
  rdf::Iri TemporalInstant(std::size_t day) const;
  rdf::Iri TrackPoint(std::size_t day) const;

  static rdf::Iri Location(std::string_view label);
  // Inverse of Location(); the full IRI when outside the ex: namespace.
  static std::string LocationLabel(const rdf::Iri& iri);

 private:
  rdf::Iri Day(std::string_view stem, std::size_t day) const;

  IngestPolicy policy_;
  rdf::Iri vessel_;
  rdf::Iri trip_;
};

// Number of triples IngestRows produces for `days` rows over `locations`
// distinct locations: 13 per day, days - 1 precedes edges, 3 fixed, and one
// per location.
constexpr std::size_t ExpectedTripleCount(std::size_t days,
                                          std::size_t locations) {
  return 13 * days + (days == 0 ? 0 : days - 1) + 3 + locations;
}

// Builds the vessel / trip / daily-part graph. Throws ValidationError for
// empty input, duplicate day labels or times that do not strictly increase.
rdf::Graph IngestRows(std::span<const datagen::ObservationRow> rows,
                      const IngestManifest& manifest = IngestManifest());
void IngestInto(rdf::Graph& graph,
                std::span<const datagen::ObservationRow> rows,
                const IngestManifest& manifest = IngestManifest());

// Shipped query texts (data/location_by_time.rq and data/transitions.rq).
std::string_view LocationByTimeQueryText();
std::string_view TransitionsQueryText();

struct LocatedInstant {
  DateTime time;
  rdf::Iri location;
  friend bool operator==(const LocatedInstant&,
                         const LocatedInstant&) = default;
};

struct SequenceDiagnostics {
  // Datetime-valued temporal instants that produced no row.
  std::size_t unmatched_instants = 0;
  // Rows dropped for a non-dateTime value or a repeated timestamp.
  std::size_t dropped_rows = 0;
};

// The location-by-time query converted to typed values, strictly increasing
// in time. A graph without the expected shape yields an empty sequence.
std::vector<LocatedInstant> LocationSequence(
    const rdf::Graph& graph, const IngestManifest& manifest = IngestManifest(),
    SequenceDiagnostics* diagnostics = nullptr);

// The transitions query as a bag, ordered by the start observation's time
// so that pair i is (location of day i, location of day i + 1).
std::vector<std::pair<rdf::Iri, rdf::Iri>> TransitionPairs(
    const rdf::Graph& graph);

// Location labels (see IngestManifest::LocationLabel) in time order.
std::vector<std::string> LocationLabels(
    const rdf::Graph& graph, const IngestManifest& manifest = IngestManifest());

}  // namespace polkg::ingest

#endif  // POLKG_INGEST_HPP_
