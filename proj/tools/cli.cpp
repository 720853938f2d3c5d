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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "polkg/datagen.hpp"
#include "polkg/dot.hpp"
#include "polkg/error.hpp"
#include "polkg/ingest.hpp"
#include "polkg/markov.hpp"
#include "polkg/matrix_io.hpp"
#include "polkg/ntriples.hpp"
#include "polkg/query.hpp"
#include "polkg/vocabulary.hpp"
#include "polkg/writeback.hpp"

namespace polkg::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading `" + path + "`");
  return ss.str();
}

// Writes through a sibling temporary so a failed write leaves no file.
void WriteFile(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write `" + path + "`");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw IoError("error while writing `" + path + "`");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw IoError("cannot write `" + path + "`: " + ec.message());
  }
}

rdf::Graph LoadGraph(const std::string& path) {
  return rdf::ParseNTriples(ReadFile(path));
}

markov::MatrixFile LoadMatrix(const std::string& path) {
  return markov::MatrixFromJson(ReadFile(path));
}

// Sorted labels of every location in the graph or the sequence.
markov::StateSpace LocationSpace(const rdf::Graph& graph,
                                 const std::vector<std::string>& sequence) {
  std::set<std::string> labels(sequence.begin(), sequence.end());
  for (const rdf::Triple& t :
       graph.Match(rdf::kAny, vocab::terms::Type(),
                   rdf::Term(vocab::terms::SpatialRegion()))) {
    labels.insert(ingest::IngestManifest::LocationLabel(t.subject()));
  }
  return markov::StateSpace(std::vector<std::string>(labels.begin(), labels.end()));
}

struct Options {
  std::size_t days = 0;
  std::uint64_t seed = datagen::kDefaultSeed;

  // shared paths
  std::string csv_path;
  std::string graph_path;
  std::string query_path;
  std::string matrix_path;
  std::string out_path;

  std::string format = "table";
  int order = 1;
  std::uint64_t steps = 1;
  std::string state;
  std::string prev;
  std::size_t day = 0;
  std::string model;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  static const vocab::PrefixTable& Prefixes() {
    return vocab::Vocabulary::Default().prefixes();
  }

  void Emit(const std::string& content) {
    if (o_.out_path.empty()) {
      out_ << content;
    } else {
      WriteFile(o_.out_path, content);
    }
  }

  void GenData() {
    datagen::GenConfig cfg;
    cfg.days = o_.days;
    cfg.seed = o_.seed;
    Emit(datagen::WriteCsv(datagen::Generate(cfg)));
  }

  void Ingest() {
    const auto rows = datagen::ReadCsv(ReadFile(o_.csv_path));
    Emit(rdf::SerializeNTriples(ingest::IngestRows(rows, ingest::IngestManifest{})));
  }

  void Query() {
    const std::string text = ReadFile(o_.query_path);
    const query::QueryAst ast = query::ParseQuery(text, Prefixes());
    const rdf::Graph graph = LoadGraph(o_.graph_path);
    const query::SolutionTable table = query::Evaluate(ast, graph);
    Emit(o_.format == "csv" ? query::FormatCsv(table, Prefixes())
                            : query::FormatText(table, Prefixes()));
  }

  void Estimate() {
    const rdf::Graph graph = LoadGraph(o_.graph_path);
    const auto sequence = ingest::LocationLabels(graph, ingest::IngestManifest{});
    if (sequence.empty()) {
      throw ValidationError("graph holds no location sequence to estimate from");
    }
    const markov::StateSpace space = LocationSpace(graph, sequence);
    if (o_.order == 1) {
      const auto counts = markov::CountTransitions(sequence, space);
      Emit(markov::ToJson(markov::EstimateFirstOrder(counts), &counts));
    } else {
      const auto counts = markov::CountPairTransitions(sequence, space);
      Emit(markov::ToJson(markov::EstimateSecondOrder(counts), &counts));
    }
  }

  void Power() {
    const markov::MatrixFile file = LoadMatrix(o_.matrix_path);
    if (file.order != 1) {
      throw ValidationError(
          "second-order matrices are not square; n-step powers are undefined");
    }
    Emit(markov::ToJson(markov::MatrixPower(*file.first, o_.steps)));
  }

  void Predict() {
    const markov::MatrixFile file = LoadMatrix(o_.matrix_path);
    std::optional<markov::Distribution> dist;
    if (file.order == 1) {
      if (!o_.prev.empty()) {
        throw ValidationError("--prev applies to second-order matrices only");
      }
      dist.emplace(markov::Predict(*file.first, o_.state, o_.steps));
    } else {
      if (o_.prev.empty()) {
        throw ValidationError("second-order prediction needs --prev");
      }
      if (o_.steps != 1) {
        throw ValidationError("second-order prediction is one step only");
      }
      dist.emplace(markov::PredictSecondOrder(*file.second, o_.prev, o_.state));
    }
    std::string text;
    for (std::size_t i = 0; i < dist->space().size(); ++i) {
      text += dist->space().label(i) + "\t" +
              markov::FormatProbability(dist->at(i)) + "\n";
    }
    out_ << text;
  }

  void Writeback() {
    const auto model = writeback::ParseModel(o_.model);
    const markov::MatrixFile file = LoadMatrix(o_.matrix_path);
    if (file.order != 1 || !file.counts) {
      throw ValidationError(
          "writeback needs a first-order matrix file that carries counts "
          "(as written by `estimate`)");
    }
    rdf::Graph graph = LoadGraph(o_.graph_path);
    writeback::WritebackOptions options;
    if (*model == writeback::Model::kProfile) {
      writeback::WritebackProfileModel(graph, *file.counts, o_.state, o_.day,
                                       options);
    } else {
      writeback::WritebackCcoModel(graph, *file.counts, o_.state, o_.day,
                                   options);
    }
    Emit(rdf::SerializeNTriples(graph));
  }

  void ExportDot() {
    const rdf::Graph graph = LoadGraph(o_.graph_path);
    rdf::Graph sub;
    std::string title;
    if (o_.day > 0) {
      sub = dot::DaySubgraph(graph, o_.day, ingest::IngestManifest{});
      title = "Day " + std::to_string(o_.day);
      if (sub.empty()) {
        throw ValidationError("day " + std::to_string(o_.day) +
                              " does not occur in the graph");
      }
    } else {
      sub = dot::WritebackSubgraph(graph);
      title = "Writeback";
      if (sub.empty()) {
        throw ValidationError(
            "graph has no writeback individuals; pass --day to draw one day");
      }
    }
    Emit(dot::ToDot(sub, Prefixes(), title));
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Pattern-of-life knowledge graph toolkit", "polkg"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen-data", "Generate observation CSV");
  gen->add_option("--days", o.days, "Number of days")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "mt19937_64 seed");
  gen->add_option("--out", o.out_path, "Output CSV")->required();

  auto* ing = app.add_subcommand("ingest", "Ingest CSV into N-Triples");
  ing->add_option("--csv", o.csv_path, "Observation CSV")->required();
  ing->add_option("--out", o.out_path, "Output graph (.nt)")->required();

  auto* qry = app.add_subcommand("query", "Run a SELECT query");
  qry->add_option("--graph", o.graph_path, "Graph (.nt)")->required();
  qry->add_option("--query", o.query_path, "Query file (.rq)")->required();
  qry->add_option("--format", o.format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));
  qry->add_option("--out", o.out_path, "Write results here instead of stdout");

  auto* est = app.add_subcommand("estimate", "Estimate a transition matrix");
  est->add_option("--graph", o.graph_path, "Graph (.nt)")->required();
  est->add_option("--order", o.order, "Markov order")
      ->check(CLI::IsMember({1, 2}));
  est->add_option("--out", o.out_path, "Output matrix file")->required();

  auto* pow = app.add_subcommand("power", "n-step transition matrix");
  pow->add_option("--matrix", o.matrix_path, "Matrix file")->required();
  pow->add_option("--steps", o.steps, "Number of steps")->required();
  pow->add_option("--out", o.out_path, "Write here instead of stdout");

  auto* pre = app.add_subcommand("predict", "Next-state distribution");
  pre->add_option("--matrix", o.matrix_path, "Matrix file")->required();
  pre->add_option("--state", o.state, "Current state")->required();
  pre->add_option("--prev", o.prev, "Previous state (second order)");
  pre->add_option("--steps", o.steps, "Steps ahead (first order)")
      ->check(CLI::PositiveNumber);

  auto* wb = app.add_subcommand("writeback", "Write probabilities into a graph");
  wb->add_option("--graph", o.graph_path, "Graph (.nt)")->required();
  wb->add_option("--matrix", o.matrix_path, "Matrix file with counts")->required();
  wb->add_option("--state", o.state, "Current state")->required();
  wb->add_option("--day", o.day, "Index of the current day")
      ->required()
      ->check(CLI::PositiveNumber);
  wb->add_option("--model", o.model, "cco or profile")
      ->required()
      ->check(CLI::IsMember({"cco", "profile"}));
  wb->add_option("--out", o.out_path, "Output graph (.nt)")->required();

  auto* dot = app.add_subcommand("export-dot", "Render a subgraph as DOT");
  dot->add_option("--graph", o.graph_path, "Graph (.nt)")->required();
  dot->add_option("--day", o.day, "Day to draw (default: writeback subgraph)")
      ->check(CLI::PositiveNumber);
  dot->add_option("--out", o.out_path, "Output .dot file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  Runner runner(o, out);
  const std::map<CLI::App*, std::function<void()>> actions = {
      {gen, [&] { runner.GenData(); }},
      {ing, [&] { runner.Ingest(); }},
      {qry, [&] { runner.Query(); }},
      {est, [&] { runner.Estimate(); }},
      {pow, [&] { runner.Power(); }},
      {pre, [&] { runner.Predict(); }},
      {wb, [&] { runner.Writeback(); }},
      {dot, [&] { runner.ExportDot(); }},
  };
  try {
    for (const auto& [sub, action] : actions) {
      if (sub->parsed()) action();
    }
  } catch (const IoError& e) {
    err << "polkg: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "polkg: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace polkg::cli
