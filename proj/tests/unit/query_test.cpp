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

#include "polkg/query.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polkg/error.hpp"
#include "polkg/ingest.hpp"
#include "polkg/vocabulary.hpp"

namespace polkg::query {
namespace {

const vocab::PrefixTable& Table() {
  return vocab::Vocabulary::Default().prefixes();
}

// The location listing with its mixed prefix case and aliased property; the
// bare vessel name gets the ex: prefix the grammar requires.
constexpr const char* kVariantLocationQuery = R"(
SELECT ?datetime ?location
WHERE
{
  ex:fishingVessel bfo:occupies_spatial_region
  ?fishingVesselTrackPoint .
  ?fishingVesselTrackPoint
  cco:spatial_part_of ?location .
  ?spatiotemporalInstant
  Bfo:spatially_projects_onto
  ?fishingVesselTrackPoint .
  ?spatiotemporalInstant
  Bfo:temporally_projects_onto
  ?temporalInstant .
  ?temporalInstant cco:has_datetime_value
  ?datetime .
}
ORDER BY ?datetime
)";

TEST(ParseQueryTest, LocationQuery) {
  const QueryAst ast = ParseQuery(ingest::LocationByTimeQueryText(), Table());
  EXPECT_EQ(ast.patterns.size(), 5u);
  EXPECT_EQ(ast.projection, (std::vector<std::string>{"?datetime", "?location"}));
  EXPECT_EQ(ast.order_by, "?datetime");
}

TEST(ParseQueryTest, TransitionsQuery) {
  const QueryAst ast = ParseQuery(ingest::TransitionsQueryText(), Table());
  EXPECT_EQ(ast.patterns.size(), 9u);
  EXPECT_EQ(ast.projection.size(), 2u);
  EXPECT_FALSE(ast.order_by.has_value());
}

TEST(ParseQueryTest, ShippedQueryFilesMatchEmbeddedText) {
  EXPECT_EQ(testing::ReadData("location_by_time.rq"),
            ingest::LocationByTimeQueryText());
  EXPECT_EQ(testing::ReadData("transitions.rq"), ingest::TransitionsQueryText());
}

TEST(ParseQueryTest, EmptyBlockIsAnError) {
  try {
    ParseQuery("SELECT ?x WHERE { }", Table());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(e.reason().find("empty pattern block"), std::string::npos);
  }
}

TEST(ParseQueryTest, AbbreviationsAndLocalPrefixes) {
  const QueryAst ast = ParseQuery(
      "PREFIX my: <urn:my:>\n"
      "SELECT ?s WHERE { ?s a my:C ; my:p ?o , \"x\" , 3 , 0.5 . }",
      Table());
  ASSERT_EQ(ast.patterns.size(), 5u);
  EXPECT_EQ(std::get<rdf::Term>(ast.patterns[0].predicate),
            rdf::Term(vocab::terms::Type()));
  EXPECT_EQ(std::get<rdf::Term>(ast.patterns[0].object),
            rdf::Term(rdf::Iri("urn:my:C")));
  EXPECT_EQ(std::get<rdf::Term>(ast.patterns[3].object),
            rdf::Term(rdf::Literal::Integer(3)));
  EXPECT_EQ(std::get<rdf::Term>(ast.patterns[4].object),
            rdf::Term(rdf::Literal::Decimal(0.5)));
}

TEST(ParseQueryTest, RejectsOutsideTheSubset) {
  const char* bad[] = {
      "SELECT * WHERE { ?s ?p ?o }",
      "SELECT ?s WHERE { ?s ?p ?o } ORDER BY DESC(?s)",
      "SELECT ?s WHERE { _:b ?p ?s }",
      "SELECT ?s WHERE { ?s ?p \"x\"@en }",
      "SELECT ?s WHERE { \"x\" ?p ?s }",
      "SELECT ?s WHERE { ?s ?p ?o ",
      "SELECT ?s WHERE { ?s zzz:p ?o }",
      "SELECT ?s WHERE { ?s ?p ?o } LIMIT 1",
      "ASK { ?s ?p ?o }",
  };
  for (const char* text : bad) {
    EXPECT_THROW(ParseQuery(text, Table()), ValidationError) << text;
  }
}

TEST(ParseQueryTest, ErrorsCarryPosition) {
  try {
    ParseQuery("SELECT ?s\nWHERE {\n  ?s ?p ?o\n  ?x\n", Table());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GE(e.line(), 3u);
  }
}

TEST(ParseQueryTest, UnboundProjectionIsValidationError) {
  EXPECT_THROW(ParseQuery("SELECT ?z WHERE { ?s ?p ?o }", Table()),
               ValidationError);
  EXPECT_THROW(ParseQuery("SELECT ?s WHERE { ?s ?p ?o } ORDER BY ?z", Table()),
               ValidationError);
}

TEST(EvaluateTest, VariantSpellingsOverSample) {
  const rdf::Graph g = ingest::IngestRows(testing::SampleRows());
  const SolutionTable t = Evaluate(ParseQuery(kVariantLocationQuery, Table()), g);
  ASSERT_EQ(t.rows.size(), 3u);
  const char* want[][2] = {{"2023-04-08 12:00:00", "location3"},
                           {"2023-04-09 12:00:00", "location1"},
                           {"2023-04-10 12:00:00", "location3"}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(DisplayTerm(t.rows[i][0], Table()), want[i][0]);
    EXPECT_EQ(DisplayTerm(t.rows[i][1], Table()), want[i][1]);
  }
}

TEST(EvaluateTest, TransitionsOverSample) {
  const rdf::Graph g = ingest::IngestRows(testing::SampleRows());
  const SolutionTable t =
      Evaluate(ParseQuery(ingest::TransitionsQueryText(), Table()), g);
  std::vector<std::pair<std::string, std::string>> got;
  for (const auto& row : t.rows) {
    got.emplace_back(DisplayTerm(row[0], Table()), DisplayTerm(row[1], Table()));
  }
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::pair<std::string, std::string>>{
                     {"location1", "location3"}, {"location3", "location1"}}));
}

TEST(EvaluateTest, EmptyGraphGivesNoRows) {
  for (auto text : {ingest::LocationByTimeQueryText(),
                    ingest::TransitionsQueryText()}) {
    EXPECT_TRUE(Evaluate(ParseQuery(text, Table()), rdf::Graph()).rows.empty());
  }
}

TEST(EvaluateTest, BagSemanticsKeepsDuplicates) {
  rdf::Graph g;
  g.Insert(rdf::Iri("urn:a"), rdf::Iri("urn:p"), rdf::Iri("urn:b"));
  g.Insert(rdf::Iri("urn:a"), rdf::Iri("urn:p"), rdf::Iri("urn:c"));
  const SolutionTable t =
      Evaluate(ParseQuery("SELECT ?s WHERE { ?s <urn:p> ?o }", Table()), g);
  EXPECT_EQ(t.rows.size(), 2u);
}

TEST(FormatTest, CsvAndText) {
  const rdf::Graph g = ingest::IngestRows(testing::SampleRows());
  const SolutionTable t =
      Evaluate(ParseQuery(ingest::LocationByTimeQueryText(), Table()), g);
  EXPECT_EQ(FormatCsv(t, Table()),
            "datetime,location\n"
            "2023-04-08 12:00:00,location3\n"
            "2023-04-09 12:00:00,location1\n"
            "2023-04-10 12:00:00,location3\n");
  const std::string text = FormatText(t, Table());
  EXPECT_NE(text.find("(3 rows)"), std::string::npos);
}

TEST(FormatTest, CsvQuotesWhenNeeded) {
  SolutionTable t{{"?v"}, {{rdf::Literal::String("a,\"b\"")}}};
  EXPECT_EQ(FormatCsv(t, Table()), "v\n\"a,\"\"b\"\"\"\n");
}

// Property: the evaluator equals brute-force assignment enumeration as bags.
TEST(EvaluatePropertyTest, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const testing::BgpCase c = testing::RandomBgpCase(rng);
    const QueryAst ast = ParseQuery(c.text, Table());
    const SolutionTable got = Evaluate(ast, c.graph);
    ASSERT_EQ(testing::RowKeys(got.rows),
              testing::RowKeys(testing::BruteForceBgp(ast, c.graph, c.universe)))
        << c.text;
  }
}

// Property: reordering the patterns leaves the solution bag unchanged.
TEST(EvaluatePropertyTest, PatternOrderInvariance) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 100; ++round) {
    const testing::BgpCase c = testing::RandomBgpCase(rng);
    QueryAst ast = ParseQuery(c.text, Table());
    const auto before = testing::RowKeys(Evaluate(ast, c.graph).rows);
    std::shuffle(ast.patterns.begin(), ast.patterns.end(), rng);
    ASSERT_EQ(testing::RowKeys(Evaluate(ast, c.graph).rows), before) << c.text;
  }
}

}  // namespace
}  // namespace polkg::query
