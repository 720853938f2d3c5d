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

#include <benchmark/benchmark.h>

#include <random>

#include "polkg/datagen.hpp"
#include "polkg/ingest.hpp"
#include "polkg/markov.hpp"
#include "polkg/ntriples.hpp"
#include "polkg/query.hpp"
#include "polkg/vocabulary.hpp"

namespace {

using namespace polkg;

std::vector<datagen::ObservationRow> Rows(std::size_t days) {
  datagen::GenConfig cfg;
  cfg.days = days;
  return datagen::Generate(cfg);
}

void BM_Ingest(benchmark::State& state) {
  const auto rows = Rows(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ingest::IngestRows(rows));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ingest)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Match(benchmark::State& state) {
  const rdf::Graph g = ingest::IngestRows(Rows(static_cast<std::size_t>(state.range(0))));
  const ingest::IngestManifest m;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        g.Match(m.TripPart(state.range(0) / 2), rdf::kAny, rdf::kAny));
  }
}
BENCHMARK(BM_Match)->Arg(100)->Arg(10000);

void BM_LocationQuery(benchmark::State& state) {
  const rdf::Graph g = ingest::IngestRows(Rows(static_cast<std::size_t>(state.range(0))));
  const auto ast = query::ParseQuery(ingest::LocationByTimeQueryText(),
                                     vocab::Vocabulary::Default().prefixes());
  for (auto _ : state) benchmark::DoNotOptimize(query::Evaluate(ast, g));
}
BENCHMARK(BM_LocationQuery)->Arg(100)->Arg(1000);

void BM_TransitionsQuery(benchmark::State& state) {
  const rdf::Graph g = ingest::IngestRows(Rows(static_cast<std::size_t>(state.range(0))));
  const auto ast = query::ParseQuery(ingest::TransitionsQueryText(),
                                     vocab::Vocabulary::Default().prefixes());
  for (auto _ : state) benchmark::DoNotOptimize(query::Evaluate(ast, g));
}
BENCHMARK(BM_TransitionsQuery)->Arg(100)->Arg(1000);

void BM_ParseNTriples(benchmark::State& state) {
  const std::string text = rdf::SerializeNTriples(
      ingest::IngestRows(Rows(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(rdf::ParseNTriples(text));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseNTriples)->Arg(100)->Arg(1000);

void BM_MatrixPower(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("s" + std::to_string(i));
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += (v[i * n + j] = u(rng));
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] /= sum;
  }
  const markov::TransitionMatrix p(
      markov::StateSpace(labels), v,
      std::vector<markov::RowStatus>(n, markov::RowStatus::kObserved), 1e-6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(markov::MatrixPower(p, state.range(1)));
  }
}
BENCHMARK(BM_MatrixPower)->Args({3, 5})->Args({3, 1000})->Args({50, 64});

}  // namespace

BENCHMARK_MAIN();
