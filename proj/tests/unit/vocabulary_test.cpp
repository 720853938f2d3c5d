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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polkg/error.hpp"
#include "polkg/ingest.hpp"
#include "polkg/ntriples.hpp"
#include "polkg/writeback.hpp"

namespace polkg::vocab {
namespace {

const PrefixTable& Table() { return Vocabulary::Default().prefixes(); }

TEST(PrefixTableTest, ResolvesByConcatenation) {
  EXPECT_EQ(Table().Resolve("bfo:precedes").value(),
            "http://example.org/bfo/precedes");
}

TEST(PrefixTableTest, PrefixesAreCaseInsensitive) {
  EXPECT_EQ(Table().Resolve("Bfo:precedes"), Table().Resolve("bfo:precedes"));
  EXPECT_EQ(Table().Resolve("BFO:spatially_projects_onto"),
            Table().Resolve("bfo:spatially_projects_onto"));
}

TEST(PrefixTableTest, UnknownPrefixNamesThePrefix) {
  try {
    Table().Resolve("zzz:x");
    FAIL() << "expected ResolutionError";
  } catch (const ResolutionError& e) {
    EXPECT_EQ(e.prefix(), "zzz");
    EXPECT_NE(std::string(e.what()).find("zzz"), std::string::npos);
  }
}

TEST(PrefixTableTest, AliasesCanonicalize) {
  EXPECT_EQ(Table().Resolve("cco:spatial_part_of"), terms::SpatialPartOf());
  EXPECT_EQ(Table().Resolve("bfo:has_occurent_part"), terms::HasOccurrentPart());
}

TEST(PrefixTableTest, CompactPicksLongestNamespace) {
  PrefixTable t;
  t.Add("a", "http://x.org/");
  t.Add("b", "http://x.org/deep/");
  EXPECT_EQ(t.Compact(rdf::Iri("http://x.org/deep/n")), "b:n");
  EXPECT_EQ(t.Compact(rdf::Iri("http://x.org/n")), "a:n");
  EXPECT_EQ(t.Compact(rdf::Iri("urn:other")), std::nullopt);
}

TEST(VocabularyTest, HasSpatiotemporalInstantClass) {
  const VocabTerm* t = Vocabulary::Default().FindByLabel("Spatiotemporal Instant");
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->kind, TermKind::kClass);
}

TEST(VocabularyTest, HasPrecedes) {
  const VocabTerm* t = Vocabulary::Default().Find(terms::Precedes());
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->prefixed_name, "bfo:precedes");
  EXPECT_EQ(t->kind, TermKind::kObjectProperty);
}

TEST(VocabularyTest, EveryPrefixedNameResolves) {
  for (const VocabTerm& t : Vocabulary::Default().terms()) {
    EXPECT_EQ(Table().Resolve(t.prefixed_name), t.iri) << t.prefixed_name;
    EXPECT_FALSE(t.label.empty()) << t.prefixed_name;
    EXPECT_FALSE(t.definition.empty()) << t.prefixed_name;
  }
}

TEST(VocabularyTest, RequiredTermsArePresent) {
  for (const VocabTerm& t : RequiredTerms()) {
    EXPECT_TRUE(Vocabulary::Default().Contains(t.iri)) << t.prefixed_name;
  }
}

TEST(VocabularyTest, ManifestRoundTrips) {
  const std::string text = Vocabulary::Default().ToManifest();
  const Vocabulary back = Vocabulary::FromManifest(text);
  EXPECT_EQ(back.ToManifest(), text);
  EXPECT_EQ(back.terms().size(), Vocabulary::Default().terms().size());
}

TEST(VocabularyTest, ShippedManifestMatchesBuiltIn) {
  EXPECT_EQ(testing::ReadData("vocabulary.tsv"),
            Vocabulary::Default().ToManifest());
}

TEST(VocabularyTest, ManifestRejectsDuplicatesAndBadLines) {
  const std::string base = "prefix\tex\thttp://example.org/pol/\n";
  EXPECT_THROW(Vocabulary::FromManifest(base + "class\tex:A\tA\td\nclass\tex:A\tA2\td\n"),
               ValidationError);
  EXPECT_THROW(Vocabulary::FromManifest(base + "widget\tex:A\tA\td\n"),
               ValidationError);
  EXPECT_THROW(Vocabulary::FromManifest(base + "class\tzzz:A\tA\td\n"),
               ValidationError);
}

// Closed vocabulary: every predicate and every class used by ingest and both
// writeback models is a vocabulary term.
TEST(VocabularyTest, PipelineUsesOnlyVocabularyTerms) {
  rdf::Graph g = ingest::IngestRows(testing::SampleRows());
  markov::TransitionCounts counts(markov::StateSpace({"location1", "location3"}),
                                  {0, 1, 1, 0});
  writeback::WritebackOptions opts;
  opts.link_realizations = true;
  writeback::WritebackProfileModel(g, counts, "location1", 3, opts);
  writeback::WritebackCcoModel(g, counts, "location3", 3);
  const Vocabulary& v = Vocabulary::Default();
  for (const rdf::Triple& t : g) {
    EXPECT_TRUE(v.Contains(t.predicate())) << t.ToNTriples();
    if (t.predicate() == terms::Type()) {
      EXPECT_TRUE(v.Contains(t.object().iri())) << t.ToNTriples();
    }
  }
}

TEST(IndividualTest, MintsInApplicationNamespace) {
  EXPECT_EQ(Individual("fishingVessel").value(),
            ApplicationNamespace() + "fishingVessel");
}

}  // namespace
}  // namespace polkg::vocab
