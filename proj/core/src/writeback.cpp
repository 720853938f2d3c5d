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

#include "polkg/writeback.hpp"

#include <map>
#include <set>

#include "polkg/error.hpp"
#include "polkg/query.hpp"
#include "polkg/vocabulary.hpp"

namespace polkg::writeback {
namespace {

namespace t = vocab::terms;

rdf::Iri Local(const ingest::IngestManifest& m, const std::string& name) {
  return vocab::Individual(m.policy().prefix + name);
}

rdf::Iri PatternOfLife(const ingest::IngestManifest& m) {
  return Local(m, m.policy().vessel + "_PoL");
}

std::string Transition(const std::string& from, const std::string& to) {
  return from + "to" + to;
}

std::size_t CheckRow(const markov::TransitionCounts& counts,
                     std::string_view current) {
  const std::size_t s = counts.space().Index(current);
  if (counts.RowTotal(s) == 0) {
    throw ValidationError("no transitions out of `" + std::string(current) +
                          "` to normalize");
  }
  return s;
}

query::SolutionTable Run(const std::string& text, const rdf::Graph& graph) {
  return query::Evaluate(
      query::ParseQuery(text, vocab::Vocabulary::Default().prefixes()), graph);
}

std::string Ref(const rdf::Iri& iri) { return "<" + iri.value() + ">"; }

void LinkRealizations(rdf::Graph& graph, const markov::TransitionCounts& counts,
                      std::size_t s, const ingest::IngestManifest& m) {
  const std::string text = R"(
SELECT ?part2 ?start ?end
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
  )" + Ref(m.trip()) + R"( bfo:has_occurrent_part ?part2 .
})";
  const rdf::Iri from = ingest::IngestManifest::Location(counts.space().label(s));
  const auto table = Run(text, graph);
  for (const auto& row : table.rows) {
    if (row[1].iri() != from) continue;
    const std::string to = ingest::IngestManifest::LocationLabel(row[2].iri());
    if (!counts.space().Find(to)) continue;
    graph.Insert(row[0].iri(), t::Realizes(),
                 Local(m, Transition(counts.space().label(s), to) + "_Disposition"));
  }
}

}  // namespace

std::string_view ModelName(Model model) {
  return model == Model::kCco ? "cco" : "profile";
}

std::optional<Model> ParseModel(std::string_view name) {
  if (name == "cco") return Model::kCco;
  if (name == "profile") return Model::kProfile;
  return std::nullopt;
}

ProbabilityAssertion::ProbabilityAssertion(std::string from_state,
                                           std::string to_state,
                                           std::uint64_t count,
                                           std::uint64_t total,
                                           rdf::Iri subject_iri,
                                           rdf::Iri pmice_iri)
    : from_(std::move(from_state)),
      to_(std::move(to_state)),
      count_(count),
      total_(total),
      subject_(std::move(subject_iri)),
      pmice_(std::move(pmice_iri)) {
  if (total_ == 0) throw ValidationError("probability total must be positive");
  if (count_ > total_) throw ValidationError("count exceeds total");
}

std::vector<ProbabilityAssertion> WritebackProfileModel(
    rdf::Graph& graph, const markov::TransitionCounts& counts,
    std::string_view current, std::size_t day_index,
    const WritebackOptions& options) {
  if (day_index == 0) throw ValidationError("day index must be positive");
  const std::size_t s = CheckRow(counts, current);
  const ingest::IngestManifest& m = options.manifest;
  const markov::StateSpace& space = counts.space();
  const std::string& from = space.label(s);
  const std::uint64_t total = counts.RowTotal(s);

  const rdf::Iri pol = PatternOfLife(m);
  graph.Insert(pol, t::Type(), t::PatternOfLife());
  graph.Insert(pol, t::Type(), t::PatternProcessProfile());
  graph.Insert(pol, t::OccurrentPartOf(), m.trip());

  const rdf::Iri total_ice = Local(m, "total" + from + "toXTransitions");
  graph.Insert(total_ice, t::Type(), t::TransitionTotalIce());
  graph.Insert(total_ice, t::IsAMeasurementOf(), pol);
  graph.Insert(total_ice, t::HasIntegerValue(),
               rdf::Literal::Integer(static_cast<std::int64_t>(total)));

  std::vector<ProbabilityAssertion> out;
  for (std::size_t j = 0; j < space.size(); ++j) {
    const std::string& to = space.label(j);
    const std::string name = Transition(from, to);
    const rdf::Iri part = Local(m, name + "_PoL_Part");
    graph.Insert(part, t::Type(), t::PatternProcessProfile());
    graph.Insert(part, t::OccurrentPartOf(), pol);
    graph.Insert(part, t::TransitionFrom(), ingest::IngestManifest::Location(from));
    graph.Insert(part, t::TransitionTo(), ingest::IngestManifest::Location(to));

    const rdf::Iri disposition = Local(m, name + "_Disposition");
    graph.Insert(disposition, t::Type(), t::Disposition());
    graph.Insert(disposition, t::InheresIn(), m.vessel());

    const std::uint64_t count = counts.at(s, j);
    const rdf::Iri count_ice = Local(m, name + "TransitionCount");
    graph.Insert(count_ice, t::Type(), t::TransitionCountIce());
    graph.Insert(count_ice, t::IsAMeasurementOf(), part);
    graph.Insert(count_ice, t::HasIntegerValue(),
                 rdf::Literal::Integer(static_cast<std::int64_t>(count)));

    if (count == 0) continue;
    ProbabilityAssertion a(from, to, count, total, part,
                           Local(m, "markovPMICE_" + name));
    graph.Insert(a.pmice_iri(), t::Type(), t::MarkovPmice());
    graph.Insert(a.pmice_iri(), t::IsAMeasurementOf(), part);
    graph.Insert(a.pmice_iri(), t::HasDecimalValue(),
                 rdf::Literal::Decimal(a.value()));
    out.push_back(std::move(a));
  }
  if (options.link_realizations) LinkRealizations(graph, counts, s, m);
  return out;
}

std::vector<ProbabilityAssertion> WritebackCcoModel(
    rdf::Graph& graph, const markov::TransitionCounts& counts,
    std::string_view current, std::size_t day_index,
    const WritebackOptions& options) {
  if (day_index == 0) throw ValidationError("day index must be positive");
  const std::size_t s = CheckRow(counts, current);
  const ingest::IngestManifest& m = options.manifest;
  const markov::StateSpace& space = counts.space();
  const std::string& from = space.label(s);
  const std::uint64_t total = counts.RowTotal(s);

  const rdf::Iri future = m.TripPart(day_index + 1);
  if (graph.Count(future, t::HasOccurrentPart(), rdf::kAny) > 0) {
    throw ValidationError("day " + std::to_string(day_index + 1) +
                          " is already observed; it cannot be predicted");
  }
  graph.Insert(future, t::Type(), t::Process());
  graph.Insert(future, t::Predicted(), rdf::Literal::String("true"));

  std::vector<ProbabilityAssertion> out;
  for (std::size_t j = 0; j < space.size(); ++j) {
    const std::uint64_t count = counts.at(s, j);
    if (count == 0) continue;
    const std::string& to = space.label(j);
    ProbabilityAssertion a(
        from, to, count, total, future,
        Local(m, "markovPMICE_d" + std::to_string(day_index + 1) + "_" +
                     Transition(from, to)));
    graph.Insert(a.pmice_iri(), t::Type(), t::MarkovPmice());
    graph.Insert(a.pmice_iri(), t::ModallyAbout(), future);
    graph.Insert(a.pmice_iri(), t::TransitionFrom(),
                 ingest::IngestManifest::Location(from));
    graph.Insert(a.pmice_iri(), t::TransitionTo(),
                 ingest::IngestManifest::Location(to));
    graph.Insert(a.pmice_iri(), t::HasDecimalValue(),
                 rdf::Literal::Decimal(a.value()));
    out.push_back(std::move(a));
  }
  return out;
}

markov::Distribution ReadProbabilities(const rdf::Graph& graph,
                                       std::string_view current, Model model,
                                       const ingest::IngestManifest& manifest,
                                       std::optional<std::size_t> day_index) {
  const rdf::Iri from = ingest::IngestManifest::Location(current);

  // (to-location, value) pairs, one per PMICE.
  std::vector<std::pair<std::string, double>> found;
  if (model == Model::kProfile) {
    const std::string text =
        "SELECT ?to ?value WHERE {\n"
        "  ?pmice rdf:type ex:MarkovPMICE .\n"
        "  ?pmice cco:is_a_measurement_of ?part .\n"
        "  ?part rdf:type ex:PatternProcessProfile .\n"
        "  ?part bfo:occurrent_part_of " + Ref(PatternOfLife(manifest)) + " .\n"
        "  ?part ex:transition_from " + Ref(from) + " .\n"
        "  ?part ex:transition_to ?to .\n"
        "  ?pmice cco:has_decimal_value ?value .\n"
        "}";
    for (const auto& row : Run(text, graph).rows) {
      found.emplace_back(ingest::IngestManifest::LocationLabel(row[0].iri()),
                         row[1].literal().AsDecimal());
    }
  } else {
    const std::string text =
        "SELECT ?future ?to ?value WHERE {\n"
        "  ?pmice rdf:type ex:MarkovPMICE .\n"
        "  ?pmice ex:modally_about ?future .\n"
        "  ?future ex:predicted \"true\" .\n"
        "  ?pmice ex:transition_from " + Ref(from) + " .\n"
        "  ?pmice ex:transition_to ?to .\n"
        "  ?pmice cco:has_decimal_value ?value .\n"
        "}";
    const std::string stem = manifest.TripPart(0).value();
    const std::string part_prefix = stem.substr(0, stem.size() - 1);
    std::set<std::string> futures;
    const auto table = Run(text, graph);
    for (const auto& row : table.rows) {
      const std::string& f = row[0].iri().value();
      if (!f.starts_with(part_prefix)) continue;
      if (day_index && row[0].iri() != manifest.TripPart(*day_index + 1)) continue;
      futures.insert(f);
      found.emplace_back(ingest::IngestManifest::LocationLabel(row[1].iri()),
                         row[2].literal().AsDecimal());
    }
    if (futures.size() > 1) {
      throw ValidationError("several predicted trip parts carry probabilities "
                            "out of `" + std::string(current) +
                            "`; pass a day index");
    }
  }
  if (found.empty()) {
    throw NotFoundError("no " + std::string(ModelName(model)) +
                        " probabilities written for `" + std::string(current) +
                        "`");
  }

  std::vector<std::string> labels;
  for (const rdf::Triple& tr :
       graph.Match(rdf::kAny, t::Type(), rdf::Term(t::SpatialRegion()))) {
    labels.push_back(ingest::IngestManifest::LocationLabel(tr.subject()));
  }
  std::set<std::string> known(labels.begin(), labels.end());
  for (const auto& [to, v] : found) {
    if (known.insert(to).second) labels.push_back(to);
  }
  if (known.insert(std::string(current)).second) labels.emplace_back(current);
  markov::StateSpace space(std::move(labels));

  std::vector<double> mass(space.size(), 0.0);
  for (const auto& [to, v] : found) {
    double& cell = mass[space.Index(to)];
    if (cell != 0.0) {
      throw ValidationError("two probabilities for `" + std::string(current) +
                            "` -> `" + to + "`");
    }
    cell = v;
  }
  return markov::Distribution(std::move(space), std::move(mass));
}

}  // namespace polkg::writeback
