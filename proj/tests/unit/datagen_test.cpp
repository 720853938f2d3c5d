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

#include "polkg/datagen.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polkg/error.hpp"
#include "polkg/markov.hpp"

namespace polkg::datagen {
namespace {

TEST(UnitSamplerTest, EngineIsStandardMt19937_64) {
  // The standard pins the 10000th output of a default-seeded engine.
  std::mt19937_64 engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ull);

  UnitSampler s(kDefaultSeed);
  std::mt19937_64 ref(kDefaultSeed);
  for (int i = 0; i < 100; ++i) {
    const double u = s.Next();
    EXPECT_EQ(u, static_cast<double>(ref() >> 11) / 9007199254740992.0);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(SampleIndexTest, InvertsCumulativeSum) {
  const double p[] = {0.25, 0.5, 0.25};
  EXPECT_EQ(SampleIndex(p, 0.0), 0u);
  EXPECT_EQ(SampleIndex(p, 0.2499), 0u);
  EXPECT_EQ(SampleIndex(p, 0.25), 1u);
  EXPECT_EQ(SampleIndex(p, 0.7499), 1u);
  EXPECT_EQ(SampleIndex(p, 0.75), 2u);
  EXPECT_EQ(SampleIndex(p, 0.9999999), 2u);
  const double skip[] = {0.5, 0.0, 0.5};
  EXPECT_EQ(SampleIndex(skip, 0.5), 2u);
}

TEST(GenerateTest, HundredDaysEndsMidJuly) {
  const auto rows = Generate({});
  ASSERT_EQ(rows.size(), 100u);
  EXPECT_EQ(rows.front().time.ToSpaced(), "2023-04-08 12:00:00");
  EXPECT_EQ(rows.front().day_label, "Day1");
  EXPECT_EQ(rows.back().time.ToSpaced(), "2023-07-16 12:00:00");
  EXPECT_EQ(rows.back().day_label, "Day100");
}

TEST(GenerateTest, OneDayIsTheStart) {
  GenConfig cfg;
  cfg.days = 1;
  const auto rows = Generate(cfg);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].time, cfg.start);
}

TEST(GenerateTest, IdentityKernelIsAbsorbing) {
  GenConfig cfg;
  cfg.kernel = Kernel{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  cfg.initial_location = "location2";
  for (const auto& row : Generate(cfg)) EXPECT_EQ(row.location, "location2");
}

TEST(GenerateTest, RejectsBadConfig) {
  GenConfig zero;
  zero.days = 0;
  EXPECT_THROW(Generate(zero), ValidationError);
  GenConfig bad;
  bad.kernel = Kernel{{{0.5, 0.4, 0}, {0, 1, 0}, {0, 0, 1}}};
  EXPECT_THROW(Generate(bad), ValidationError);
  GenConfig neg;
  neg.kernel = Kernel{{{1.5, -0.5, 0}, {0, 1, 0}, {0, 0, 1}}};
  EXPECT_THROW(Generate(neg), ValidationError);
  GenConfig init;
  init.initial_location = "location9";
  EXPECT_THROW(Generate(init), ValidationError);
}

TEST(GenerateTest, SeedDeterminesOutput) {
  GenConfig a, b;
  b.seed = kDefaultSeed + 1;
  EXPECT_EQ(Generate(a), Generate(a));
  EXPECT_NE(Generate(a), Generate(b));
}

TEST(GenerateTest, DefaultSeedReproducesShippedFixture) {
  EXPECT_EQ(WriteCsv(Generate({})), testing::ReadData("fishing_vessel_100d.csv"));
}

TEST(CsvTest, SampleRowsRoundTrip) {
  const auto rows = testing::SampleRows();
  const std::string text = WriteCsv(rows);
  EXPECT_EQ(text, testing::ReadData("sample_3day.csv"));
  EXPECT_EQ(ReadCsv(text), rows);
}

TEST(CsvTest, EmptyIsHeaderOnly) {
  EXPECT_EQ(WriteCsv({}), "Time,Day,Location\n");
  EXPECT_TRUE(ReadCsv("Time,Day,Location\n").empty());
}

TEST(CsvTest, RoundTripProperty) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 7919;
    cfg.days = 1 + seed * 13;
    const auto rows = Generate(cfg);
    EXPECT_EQ(ReadCsv(WriteCsv(rows)), rows);
  }
}

TEST(CsvTest, RejectsMalformedInput) {
  const std::string h = "Time,Day,Location\n";
  const char* bad[] = {
      "Day,Time,Location\n",
      "Time,Day,Location\n2023-04-08 12:00:00,Day1\n",
      "Time,Day,Location\n2023-04-08 12:00,Day1,location1\n",
      "Time,Day,Location\n2023-04-08 12:00:00,Day2,location1\n",
      "Time,Day,Location\n2023-04-08 12:00:00,Day1,harbour\n",
      "Time,Day,Location\n2023-04-08 12:00:00,Day1,location1\n"
      "2023-04-08 12:00:00,Day2,location1\n",
  };
  for (const char* text : bad) {
    EXPECT_THROW(ReadCsv(text), ParseError) << text;
  }
}

TEST(CsvTest, ErrorNamesTheLine) {
  try {
    ReadCsv("Time,Day,Location\n2023-04-08 12:00:00,Day1,location1\n"
            "2023-04-09 12:00:00,Day2,nowhere\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

// Re-estimating from a long generated chain recovers the kernel.
TEST(GenerateStatisticalTest, KernelRecoveredFromLongChain) {
  const Kernel k{{{0.375, 0.281, 0.344}, {0.278, 0.500, 0.222},
                  {0.355, 0.290, 0.355}}};
  GenConfig cfg;
  cfg.days = 20001;
  cfg.kernel = k;
  std::vector<std::string> seq;
  for (const auto& row : Generate(cfg)) seq.push_back(row.location);
  const markov::StateSpace space({"location1", "location2", "location3"});
  const auto m = markov::EstimateFirstOrder(markov::CountTransitions(seq, space));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(m.at(i, j), k[i][j], 0.02);
  }
}

}  // namespace
}  // namespace polkg::datagen
