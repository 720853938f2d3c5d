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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "polkg/ntriples.hpp"

namespace polkg::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("polkg_cli_") + info->name() + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  int Call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // gen-data -> ingest -> estimate -> writeback; returns the final graph text.
  std::string Pipeline(const std::string& tag) {
    const std::string csv = Path(tag + ".csv"), nt = Path(tag + ".nt"),
                      m = Path(tag + ".json"), out = Path(tag + "_wb.nt");
    EXPECT_EQ(Call({"gen-data", "--days", "100", "--seed", "20230408", "--out", csv}),
              kExitOk);
    EXPECT_EQ(Call({"ingest", "--csv", csv, "--out", nt}), kExitOk);
    EXPECT_EQ(Call({"estimate", "--graph", nt, "--order", "1", "--out", m}), kExitOk);
    EXPECT_EQ(Call({"writeback", "--graph", nt, "--matrix", m, "--state",
                    "location1", "--day", "100", "--model", "profile", "--out", out}),
              kExitOk)
        << err_.str();
    EXPECT_GT(rdf::ParseNTriples(Slurp(out)).size(),
              rdf::ParseNTriples(Slurp(nt)).size());
    return Slurp(out);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, FullPipelineIsDeterministic) {
  const std::string a = Pipeline("a");
  const std::string b = Pipeline("b");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, PredictPrintsReferenceRow) {
  ASSERT_EQ(Call({"predict", "--matrix",
                  testing::DataPath("reference_first_order.json"), "--state",
                  "location3", "--steps", "1"}),
            kExitOk);
  EXPECT_EQ(out_.str(), "location1\t0.355\nlocation2\t0.290\nlocation3\t0.355\n");
}

TEST_F(CliTest, PredictSecondOrder) {
  ASSERT_EQ(Call({"predict", "--matrix",
                  testing::DataPath("reference_second_order.json"), "--prev",
                  "location1", "--state", "location2"}),
            kExitOk);
  EXPECT_NE(out_.str().find("location3\t0.222"), std::string::npos);
  EXPECT_EQ(Call({"predict", "--matrix",
                  testing::DataPath("reference_second_order.json"), "--state",
                  "location2"}),
            kExitValidation);
}

TEST_F(CliTest, PowerRejectsSecondOrder) {
  EXPECT_EQ(Call({"power", "--matrix", testing::DataPath("reference_first_order.json"),
                  "--steps", "5"}),
            kExitOk);
  EXPECT_NE(out_.str().find("\"order\": 1"), std::string::npos);
  EXPECT_EQ(Call({"power", "--matrix",
                  testing::DataPath("reference_second_order.json"), "--steps", "5"}),
            kExitValidation);
}

TEST_F(CliTest, MalformedQueryWritesNothing) {
  const std::string nt = Path("s.nt"), rq = Path("bad.rq"), out = Path("out.csv");
  ASSERT_EQ(Call({"ingest", "--csv", testing::DataPath("sample_3day.csv"), "--out", nt}),
            kExitOk);
  std::ofstream(rq) << "SELECT ?x WHERE { ?x ";
  EXPECT_EQ(Call({"query", "--graph", nt, "--query", rq, "--out", out}),
            kExitValidation);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(CliTest, QueryCsvReproducesSampleTable) {
  const std::string nt = Path("s.nt");
  ASSERT_EQ(Call({"ingest", "--csv", testing::DataPath("sample_3day.csv"), "--out", nt}),
            kExitOk);
  ASSERT_EQ(Call({"query", "--graph", nt, "--query",
                  testing::DataPath("location_by_time.rq"), "--format", "csv"}),
            kExitOk);
  EXPECT_EQ(out_.str(),
            "datetime,location\n"
            "2023-04-08 12:00:00,location3\n"
            "2023-04-09 12:00:00,location1\n"
            "2023-04-10 12:00:00,location3\n");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Call({}), kExitValidation);
  EXPECT_EQ(Call({"bogus"}), kExitValidation);
  EXPECT_EQ(Call({"--help"}), kExitOk);
  EXPECT_EQ(Call({"gen-data", "--days", "0", "--out", Path("x.csv")}),
            kExitValidation);
  EXPECT_FALSE(fs::exists(Path("x.csv")));
  EXPECT_EQ(Call({"ingest", "--csv", Path("missing.csv"), "--out", Path("x.nt")}),
            kExitIo);
  EXPECT_FALSE(fs::exists(Path("x.nt")));
  EXPECT_EQ(Call({"gen-data", "--days", "3", "--out", Path("no/such/dir/x.csv")}),
            kExitIo);
  EXPECT_EQ(Call({"estimate", "--graph", Path("g.nt"), "--order", "3", "--out",
                  Path("m.json")}),
            kExitValidation);
  EXPECT_EQ(Call({"writeback", "--graph", Path("g.nt"), "--matrix", Path("m.json"),
                  "--state", "location1", "--day", "1", "--model", "other",
                  "--out", Path("o.nt")}),
            kExitValidation);
}

TEST_F(CliTest, WritebackNeedsCounts) {
  const std::string nt = Path("s.nt");
  ASSERT_EQ(Call({"ingest", "--csv", testing::DataPath("sample_3day.csv"), "--out", nt}),
            kExitOk);
  EXPECT_EQ(Call({"writeback", "--graph", nt, "--matrix",
                  testing::DataPath("reference_first_order.json"), "--state",
                  "location1", "--day", "3", "--model", "cco", "--out",
                  Path("o.nt")}),
            kExitValidation);
  EXPECT_FALSE(fs::exists(Path("o.nt")));
}

TEST_F(CliTest, ExportDot) {
  const std::string nt = Path("s.nt");
  ASSERT_EQ(Call({"ingest", "--csv", testing::DataPath("sample_3day.csv"), "--out", nt}),
            kExitOk);
  ASSERT_EQ(Call({"export-dot", "--graph", nt, "--day", "2", "--out", Path("d.dot")}),
            kExitOk);
  EXPECT_EQ(Slurp(Path("d.dot")).rfind("digraph", 0), 0u);
  EXPECT_EQ(Call({"export-dot", "--graph", nt, "--out", Path("w.dot")}),
            kExitValidation);
  EXPECT_EQ(Call({"export-dot", "--graph", nt, "--day", "9", "--out", Path("n.dot")}),
            kExitValidation);
}

TEST_F(CliTest, SecondOrderEstimate) {
  const std::string nt = Path("g.nt"), m = Path("m2.json");
  ASSERT_EQ(Call({"ingest", "--csv", testing::DataPath("fishing_vessel_100d.csv"),
                  "--out", nt}),
            kExitOk);
  ASSERT_EQ(Call({"estimate", "--graph", nt, "--order", "2", "--out", m}), kExitOk);
  EXPECT_NE(Slurp(m).find("\"order\": 2"), std::string::npos);
}

}  // namespace
}  // namespace polkg::cli
