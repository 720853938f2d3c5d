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

// Independent reference implementations shared by the unit and acceptance
// suites. None of these call into the code paths they check.

#ifndef POLKG_TESTS_ORACLES_HPP_
#define POLKG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polkg/datagen.hpp"
#include "polkg/query.hpp"
#include "polkg/rdf.hpp"

namespace polkg::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(POLKG_DATA_DIR) + "/" + name;
}

inline std::string ReadData(const std::string& name) {
  std::ifstream in(DataPath(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The first three observation days of the reference data.
inline std::vector<datagen::ObservationRow> SampleRows() {
  return {
      {DateTime::ParseOrThrow("2023-04-08 12:00:00"), "Day1", "location3"},
      {DateTime::ParseOrThrow("2023-04-09 12:00:00"), "Day2", "location1"},
      {DateTime::ParseOrThrow("2023-04-10 12:00:00"), "Day3", "location3"},
  };
}

// Linear scan over every triple.
inline std::vector<rdf::Triple> ScanMatch(const rdf::Graph& g,
                                          const std::optional<rdf::Iri>& s,
                                          const std::optional<rdf::Iri>& p,
                                          const std::optional<rdf::Term>& o) {
  std::vector<rdf::Triple> out;
  for (const rdf::Triple& t : g) {
    if (s && t.subject() != *s) continue;
    if (p && t.predicate() != *p) continue;
    if (o && t.object() != *o) continue;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every row rendered to one string so bags compare as sorted vectors.
inline std::vector<std::string> RowKeys(
    const std::vector<std::vector<rdf::Term>>& rows) {
  std::vector<std::string> keys;
  for (const auto& row : rows) {
    std::string k;
    for (const auto& t : row) k += t.ToNTriples() + "\x1f";
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Enumerates every assignment of the pattern variables over `universe` and
// keeps those under which all instantiated patterns are asserted triples.
inline std::vector<std::vector<rdf::Term>> BruteForceBgp(
    const query::QueryAst& ast, const rdf::Graph& g,
    const std::vector<rdf::Term>& universe) {
  std::vector<std::string> vars;
  auto note = [&vars](const query::Slot& slot) {
    if (const auto* v = std::get_if<query::Variable>(&slot)) {
      if (std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
        vars.push_back(v->name);
      }
    }
  };
  for (const auto& p : ast.patterns) {
    note(p.subject);
    note(p.predicate);
    note(p.object);
  }
  std::vector<std::vector<rdf::Term>> out;
  std::vector<std::size_t> pick(vars.size(), 0);
  auto value = [&](const query::Slot& slot) -> const rdf::Term& {
    if (const auto* v = std::get_if<query::Variable>(&slot)) {
      const auto at = std::find(vars.begin(), vars.end(), v->name) - vars.begin();
      return universe[pick[at]];
    }
    return std::get<rdf::Term>(slot);
  };
  while (true) {
    bool ok = true;
    for (const auto& p : ast.patterns) {
      const rdf::Term& s = value(p.subject);
      const rdf::Term& pr = value(p.predicate);
      const rdf::Term& o = value(p.object);
      if (!s.is_iri() || !pr.is_iri() ||
          !g.Contains(rdf::Triple(s.iri(), pr.iri(), o))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<rdf::Term> row;
      for (const auto& name : ast.projection) {
        const auto at = std::find(vars.begin(), vars.end(), name) - vars.begin();
        row.push_back(universe[pick[at]]);
      }
      out.push_back(std::move(row));
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == universe.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

// A random graph and BGP over a small fixed term universe, rendered as query
// text so the parser is exercised as well.
struct BgpCase {
  rdf::Graph graph;
  std::string text;
  std::vector<rdf::Term> universe;
};

inline BgpCase RandomBgpCase(std::mt19937_64& rng) {
  const std::string ns = "http://example.org/pol/";
  std::vector<rdf::Iri> nodes;
  for (const char* n : {"a", "b", "c", "d", "e"}) nodes.emplace_back(ns + n);
  std::vector<rdf::Iri> preds = {rdf::Iri(ns + "p"), rdf::Iri(ns + "q"),
                                 rdf::Iri(ns + "r")};
  std::vector<rdf::Term> literals = {rdf::Literal::String("x"),
                                     rdf::Literal::Integer(7)};

  BgpCase c;
  for (const auto& n : nodes) c.universe.emplace_back(n);
  for (const auto& p : preds) c.universe.emplace_back(p);
  for (const auto& l : literals) c.universe.push_back(l);

  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  const std::size_t want = pick(101);
  for (std::size_t i = 0; i < want; ++i) {
    const rdf::Iri& s = nodes[pick(nodes.size())];
    const rdf::Iri& p = preds[pick(preds.size())];
    const std::size_t k = pick(nodes.size() + literals.size());
    c.graph.Insert(s, p,
                   k < nodes.size() ? rdf::Term(nodes[k])
                                    : literals[k - nodes.size()]);
  }

  const char* vars[] = {"?v0", "?v1", "?v2", "?v3"};
  auto node_text = [&](const rdf::Iri& iri, bool compact) {
    const std::string local = iri.value().substr(ns.size());
    return compact ? "ex:" + local : "<" + iri.value() + ">";
  };
  std::set<std::string> used;
  std::string body;
  const std::size_t patterns = 1 + pick(4);
  for (std::size_t i = 0; i < patterns; ++i) {
    auto slot = [&](int position) -> std::string {
      if (pick(3) != 0) {
        const std::string v = vars[pick(4)];
        used.insert(v);
        return v;
      }
      if (position == 1) {
        // `a` abbreviates rdf:type, which no generated triple uses.
        if (pick(8) == 0) return "a";
        return node_text(preds[pick(preds.size())], pick(2) == 0);
      }
      if (position == 2 && pick(3) == 0) {
        return pick(2) == 0 ? "\"x\"" : "7";
      }
      return node_text(nodes[pick(nodes.size())], pick(2) == 0);
    };
    const std::string s = slot(0);
    const std::string p = slot(1);
    const std::string o = slot(2);
    body += "  " + s + " " + p + " " + o + " .\n";
  }
  if (used.empty()) {
    used.insert("?v0");
    body += "  ?v0 ex:p ?v1 .\n";
    used.insert("?v1");
  }
  std::vector<std::string> proj(used.begin(), used.end());
  std::shuffle(proj.begin(), proj.end(), rng);
  proj.resize(1 + pick(proj.size()));
  c.text = "SELECT";
  for (const auto& v : proj) c.text += " " + v;
  c.text += "\nWHERE {\n" + body + "}\n";
  return c;
}

using Dense = std::vector<std::vector<double>>;

inline Dense NaiveMultiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += a[i][k] * b[k][j];
      c[i][j] = sum;
    }
  }
  return c;
}

// P^t by t - 1 successive multiplications.
inline Dense NaivePower(const Dense& p, std::uint64_t t) {
  const std::size_t n = p.size();
  Dense r(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1.0;
  for (std::uint64_t k = 0; k < t; ++k) r = NaiveMultiply(r, p);
  return r;
}

inline Dense RandomStochastic(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Dense m(n, std::vector<double>(n));
  for (auto& row : m) {
    double sum = 0.0;
    for (double& v : row) sum += (v = u(rng));
    for (double& v : row) v /= sum;
  }
  return m;
}

inline std::vector<std::string> StateLabels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  return labels;
}

}  // namespace polkg::testing

#endif  // POLKG_TESTS_ORACLES_HPP_
