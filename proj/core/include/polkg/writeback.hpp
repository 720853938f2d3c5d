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

#ifndef POLKG_WRITEBACK_HPP_
#define POLKG_WRITEBACK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polkg/ingest.hpp"
#include "polkg/markov.hpp"
#include "polkg/rdf.hpp"

namespace polkg::writeback {

// kCco: Markov PMICEs modally about a future trip part.
// kProfile: PMICEs measuring parts of the vessel's pattern of life, backed
// by count and total ICEs.
enum class Model { kCco, kProfile };

std::string_view ModelName(Model model);
std::optional<Model> ParseModel(std::string_view name);

// One materialized probability. The value is always count / total.
class ProbabilityAssertion {
 public:
  ProbabilityAssertion(std::string from_state, std::string to_state,
                       std::uint64_t count, std::uint64_t total,
                       rdf::Iri subject_iri, rdf::Iri pmice_iri);

  const std::string& from_state() const { return from_; }
  const std::string& to_state() const { return to_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t total() const { return total_; }
  double value() const {
    return static_cast<double>(count_) / static_cast<double>(total_);
  }
  // The PoL part (profile model) or the future trip part (CCO model).
  const rdf::Iri& subject_iri() const { return subject_; }
  const rdf::Iri& pmice_iri() const { return pmice_; }

 private:
  std::string from_;
  std::string to_;
  std::uint64_t count_;
  std::uint64_t total_;
  rdf::Iri subject_;
  rdf::Iri pmice_;
};

struct WritebackOptions {
  // Also assert that every historical trip part entered by a transition out
  // of `current` realizes the matching disposition.
  bool link_realizations = false;
  ingest::IngestManifest manifest;
};

// Pattern-of-life subgraph for the transitions out of `current`:
//   {vessel}_PoL            PatternOfLife + PatternProcessProfile,
//                           occurrent part of the trip
//   {s}to{j}_PoL_Part       PatternProcessProfile, occurrent part of the PoL,
//                           transition_from s, transition_to j
//   {s}to{j}_Disposition    Disposition inhering in the vessel
//   {s}to{j}TransitionCount count ICE measuring the part (every j)
//   total{s}toXTransitions  total ICE measuring the PoL
//   markovPMICE_{s}to{j}    MarkovPMICE measuring the part (count > 0 only)
// Throws ValidationError when the row of `current` has no transitions.
std::vector<ProbabilityAssertion> WritebackProfileModel(
    rdf::Graph& graph, const markov::TransitionCounts& counts,
    std::string_view current, std::size_t day_index,
    const WritebackOptions& options = {});

// Future trip part {trip}Part_d{day_index + 1} typed Process and marked
// ex:predicted "true", plus one MarkovPMICE per nonzero transition that is
// modally about it. Throws ValidationError when that day is already observed.
std::vector<ProbabilityAssertion> WritebackCcoModel(
    rdf::Graph& graph, const markov::TransitionCounts& counts,
    std::string_view current, std::size_t day_index,
    const WritebackOptions& options = {});

// Rebuilds the distribution out of `current` from the PMICE triples alone.
// The state space is every SpatialRegion individual. For the CCO model,
// `day_index` selects the writeback when several exist. Throws
// NotFoundError when nothing was written for `current`.
markov::Distribution ReadProbabilities(
    const rdf::Graph& graph, std::string_view current, Model model,
    const ingest::IngestManifest& manifest = ingest::IngestManifest(),
    std::optional<std::size_t> day_index = std::nullopt);

}  // namespace polkg::writeback

#endif  // POLKG_WRITEBACK_HPP_
