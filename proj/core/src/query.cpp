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

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "polkg/error.hpp"

namespace polkg::query {
namespace {

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

enum class Role { kSubject, kPredicate, kObject };

class Parser {
 public:
  Parser(std::string_view text, const vocab::PrefixTable& prefixes)
      : text_(text), prefixes_(prefixes) {}

  QueryAst Run() {
    QueryAst ast;
    SkipSpace();
    while (TryKeyword("PREFIX")) ReadPrefixDecl();
    if (!TryKeyword("SELECT")) Fail("expected SELECT");
    SkipSpace();
    while (!AtEnd() && (Peek() == '?' || Peek() == '$')) {
      ast.projection.push_back(ReadVariable().name);
      SkipSpace();
    }
    if (ast.projection.empty()) {
      Fail(!AtEnd() && Peek() == '*' ? "SELECT * is not supported"
                                     : "expected at least one variable");
    }
    TryKeyword("WHERE");
    Expect('{');
    const std::size_t block_start = pos_;
    ReadTriplesBlock(ast.patterns);
    Expect('}');
    if (ast.patterns.empty()) {
      pos_ = block_start;
      Fail("empty pattern block");
    }
    if (TryKeyword("ORDER")) {
      if (!TryKeyword("BY")) Fail("expected BY after ORDER");
      SkipSpace();
      if (TryKeyword("ASC")) {
        Expect('(');
        ast.order_by = ReadVariable().name;
        Expect(')');
      } else if (TryKeyword("DESC")) {
        Fail("DESC ordering is not supported");
      } else {
        if (AtEnd() || (Peek() != '?' && Peek() != '$')) {
          Fail("expected variable after ORDER BY");
        }
        ast.order_by = ReadVariable().name;
      }
    }
    SkipSpace();
    if (!AtEnd()) Fail("unexpected trailing text");
    CheckVariables(ast);
    return ast;
  }

 private:
  [[noreturn]] void Fail(const std::string& reason) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, reason);
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void SkipSpace() {
    while (!AtEnd()) {
      const char c = Peek();
      if (c == '#') {
        while (!AtEnd() && Peek() != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool TryKeyword(std::string_view kw) {
    SkipSpace();
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) {
        return false;
      }
    }
    const std::size_t after = pos_ + kw.size();
    if (after < text_.size() && (IsNameChar(text_[after]) || text_[after] == ':')) {
      return false;
    }
    pos_ = after;
    return true;
  }

  void Expect(char c) {
    SkipSpace();
    if (AtEnd() || Peek() != c) Fail(std::string("expected `") + c + "`");
    ++pos_;
  }

  void ReadPrefixDecl() {
    SkipSpace();
    const std::size_t start = pos_;
    while (!AtEnd() && IsNameChar(Peek())) ++pos_;
    std::string prefix(text_.substr(start, pos_ - start));
    if (AtEnd() || Peek() != ':') Fail("expected `:` in PREFIX declaration");
    ++pos_;
    SkipSpace();
    rdf::Iri ns = ReadIriRef();
    prefixes_.Add(std::move(prefix), ns.value());
  }

  Variable ReadVariable() {
    ++pos_;  // ? or $
    const std::size_t start = pos_;
    while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) ||
                        Peek() == '_')) {
      ++pos_;
    }
    if (pos_ == start) Fail("empty variable name");
    return Variable{"?" + std::string(text_.substr(start, pos_ - start))};
  }

  rdf::Iri ReadIriRef() {
    if (AtEnd() || Peek() != '<') Fail("expected `<`");
    const auto close = text_.find('>', pos_);
    if (close == std::string_view::npos) Fail("unterminated IRI");
    std::string value(text_.substr(pos_ + 1, close - pos_ - 1));
    try {
      rdf::Iri iri(std::move(value));
      pos_ = close + 1;
      return prefixes_.Canonical(iri);
    } catch (const ValidationError& e) {
      Fail(e.what());
    }
  }

  rdf::Iri ReadPrefixedName() {
    const std::size_t start = pos_;
    while (!AtEnd() && IsNameChar(Peek())) ++pos_;
    if (AtEnd() || Peek() != ':') {
      pos_ = start;
      Fail("expected a variable, IRI, prefixed name or literal");
    }
    ++pos_;
    while (!AtEnd() && (IsNameChar(Peek()) || Peek() == '.')) ++pos_;
    while (text_[pos_ - 1] == '.') --pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    try {
      return prefixes_.Resolve(name);
    } catch (const ResolutionError&) {
      throw;
    } catch (const ValidationError& e) {
      pos_ = start;
      Fail(e.what());
    }
  }

  rdf::Literal ReadStringLiteral() {
    ++pos_;
    std::string lexical;
    for (;;) {
      if (AtEnd()) Fail("unterminated string literal");
      const char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\n') Fail("newline in string literal");
      if (c != '\\') {
        lexical += c;
        continue;
      }
      if (AtEnd()) Fail("dangling escape");
      switch (const char e = text_[pos_++]) {
        case '"': lexical += '"'; break;
        case '\\': lexical += '\\'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 't': lexical += '\t'; break;
        default: Fail(std::string("unknown escape `\\") + e + "`");
      }
    }
    if (!AtEnd() && Peek() == '@') Fail("language tags are not supported");
    rdf::Datatype dt = rdf::Datatype::kString;
    if (text_.substr(pos_).starts_with("^^")) {
      pos_ += 2;
      const std::size_t start = pos_;
      const rdf::Iri dt_iri =
          !AtEnd() && Peek() == '<' ? ReadIriRef() : ReadPrefixedName();
      auto known = rdf::DatatypeFromIri(dt_iri.value());
      if (!known) {
        pos_ = start;
        Fail("unsupported datatype <" + dt_iri.value() + ">");
      }
      dt = *known;
    }
    try {
      return rdf::Literal(std::move(lexical), dt);
    } catch (const ValidationError& e) {
      Fail(e.what());
    }
  }

  rdf::Literal ReadNumber() {
    const std::size_t start = pos_;
    if (Peek() == '+' || Peek() == '-') ++pos_;
    bool dot = false;
    while (!AtEnd()) {
      const char c = Peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.' && !dot && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        dot = true;
        ++pos_;
      } else {
        break;
      }
    }
    std::string lexical(text_.substr(start, pos_ - start));
    try {
      return rdf::Literal(std::move(lexical), dot ? rdf::Datatype::kDecimal
                                                  : rdf::Datatype::kInteger);
    } catch (const ValidationError& e) {
      pos_ = start;
      Fail(e.what());
    }
  }

  Slot ReadSlot(Role role) {
    SkipSpace();
    if (AtEnd()) Fail("unexpected end of query");
    const char c = Peek();
    if (c == '?' || c == '$') return ReadVariable();
    if (c == '<') return rdf::Term(ReadIriRef());
    if (c == '_') Fail("blank nodes are not supported");
    if (c == '"' || std::isdigit(static_cast<unsigned char>(c)) || c == '+' ||
        c == '-') {
      if (role != Role::kObject) Fail("literal allowed only in object position");
      return rdf::Term(c == '"' ? ReadStringLiteral() : ReadNumber());
    }
    if (role == Role::kPredicate && c == 'a' &&
        (pos_ + 1 >= text_.size() ||
         (!IsNameChar(text_[pos_ + 1]) && text_[pos_ + 1] != ':'))) {
      ++pos_;
      return rdf::Term(vocab::terms::Type());
    }
    return rdf::Term(ReadPrefixedName());
  }

  void ReadTriplesBlock(std::vector<TriplePattern>& out) {
    for (;;) {
      SkipSpace();
      if (AtEnd() || Peek() == '}') return;
      Slot subject = ReadSlot(Role::kSubject);
      for (;;) {
        Slot predicate = ReadSlot(Role::kPredicate);
        for (;;) {
          Slot object = ReadSlot(Role::kObject);
          out.push_back({subject, predicate, std::move(object)});
          SkipSpace();
          if (AtEnd() || Peek() != ',') break;
          ++pos_;
        }
        SkipSpace();
        if (AtEnd() || Peek() != ';') break;
        ++pos_;
        SkipSpace();
        if (!AtEnd() && (Peek() == '.' || Peek() == '}')) break;
      }
      SkipSpace();
      if (AtEnd()) return;
      if (Peek() == '.') {
        ++pos_;
        continue;
      }
      if (Peek() != '}') Fail("expected `.` or `}` after triple pattern");
    }
  }

  void CheckVariables(const QueryAst& ast) const {
    std::set<std::string> seen;
    for (const TriplePattern& p : ast.patterns) {
      for (const Slot* s : {&p.subject, &p.predicate, &p.object}) {
        if (const auto* v = std::get_if<Variable>(s)) seen.insert(v->name);
      }
    }
    for (const std::string& v : ast.projection) {
      if (!seen.contains(v)) {
        throw ValidationError("projected variable " + v +
                              " does not occur in any pattern");
      }
    }
    if (ast.order_by && !seen.contains(*ast.order_by)) {
      throw ValidationError("ORDER BY variable " + *ast.order_by +
                            " does not occur in any pattern");
    }
  }

  std::string_view text_;
  vocab::PrefixTable prefixes_;
  std::size_t pos_ = 0;
};

using Binding = std::vector<std::optional<rdf::Term>>;

std::optional<rdf::Term> Instantiate(
    const Slot& slot, const std::map<std::string, std::size_t>& ids,
    const Binding& b) {
  if (const auto* v = std::get_if<Variable>(&slot)) return b[ids.at(v->name)];
  return std::get<rdf::Term>(slot);
}

std::optional<rdf::Iri> AsIri(const std::optional<rdf::Term>& t, bool& ok) {
  if (!t) return std::nullopt;
  if (!t->is_iri()) {
    ok = false;
    return std::nullopt;
  }
  return t->iri();
}

bool Bind(const Slot& slot, const rdf::Term& value,
          const std::map<std::string, std::size_t>& ids, Binding& b) {
  const auto* v = std::get_if<Variable>(&slot);
  if (v == nullptr) return true;
  auto& cell = b[ids.at(v->name)];
  if (cell) return *cell == value;
  cell = value;
  return true;
}

bool RowLess(const std::vector<rdf::Term>& a, const std::vector<rdf::Term>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

QueryAst ParseQuery(std::string_view text, const vocab::PrefixTable& prefixes) {
  return Parser(text, prefixes).Run();
}

SolutionTable Evaluate(const QueryAst& ast, const rdf::Graph& graph) {
  std::map<std::string, std::size_t> ids;
  for (const TriplePattern& p : ast.patterns) {
    for (const Slot* s : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<Variable>(s)) {
        ids.emplace(v->name, ids.size());
      }
    }
  }

  std::vector<Binding> partial{Binding(ids.size())};
  for (const TriplePattern& p : ast.patterns) {
    std::vector<Binding> next;
    for (const Binding& b : partial) {
      const auto s = Instantiate(p.subject, ids, b);
      const auto pr = Instantiate(p.predicate, ids, b);
      const auto o = Instantiate(p.object, ids, b);
      // A literal bound into subject or predicate position matches nothing.
      bool ok = true;
      const auto s_iri = AsIri(s, ok);
      const auto p_iri = AsIri(pr, ok);
      if (!ok) continue;
      for (const rdf::Triple& t : graph.Match(s_iri, p_iri, o)) {
        Binding extended = b;
        if (Bind(p.subject, t.subject_term(), ids, extended) &&
            Bind(p.predicate, t.predicate_term(), ids, extended) &&
            Bind(p.object, t.object(), ids, extended)) {
          next.push_back(std::move(extended));
        }
      }
    }
    partial = std::move(next);
    if (partial.empty()) break;
  }

  SolutionTable table;
  table.header = ast.projection;
  table.rows.reserve(partial.size());
  for (const Binding& b : partial) {
    std::vector<rdf::Term> row;
    row.reserve(ast.projection.size());
    for (const std::string& v : ast.projection) row.push_back(*b[ids.at(v)]);
    table.rows.push_back(std::move(row));
  }

  if (ast.order_by) {
    const auto it = std::find(ast.projection.begin(), ast.projection.end(),
                              *ast.order_by);
    if (it != ast.projection.end()) {
      const auto col = static_cast<std::size_t>(it - ast.projection.begin());
      std::stable_sort(table.rows.begin(), table.rows.end(),
                       [col](const auto& a, const auto& b) {
                         if (a[col] != b[col]) return a[col] < b[col];
                         return RowLess(a, b);
                       });
      return table;
    }
    // ORDER BY on an unprojected variable: sort the bindings themselves.
    const std::size_t id = ids.at(*ast.order_by);
    std::vector<std::size_t> order(partial.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (*partial[a][id] != *partial[b][id]) return *partial[a][id] < *partial[b][id];
      return RowLess(table.rows[a], table.rows[b]);
    });
    std::vector<std::vector<rdf::Term>> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order) sorted.push_back(std::move(table.rows[i]));
    table.rows = std::move(sorted);
    return table;
  }
  std::stable_sort(table.rows.begin(), table.rows.end(), RowLess);
  return table;
}

std::string DisplayTerm(const rdf::Term& term,
                        const vocab::PrefixTable& prefixes) {
  if (term.is_iri()) {
    const std::string& v = term.iri().value();
    const std::string& ns = vocab::ApplicationNamespace();
    if (v.size() > ns.size() && v.starts_with(ns)) return v.substr(ns.size());
    return prefixes.Compact(term.iri()).value_or(term.ToNTriples());
  }
  const rdf::Literal& lit = term.literal();
  if (lit.datatype() == rdf::Datatype::kDateTime) {
    return lit.AsDateTime().ToSpaced();
  }
  return lit.lexical();
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> Render(
    const SolutionTable& table, const vocab::PrefixTable& prefixes) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head;
  for (const std::string& h : table.header) head.push_back(h.substr(1));
  cells.push_back(std::move(head));
  for (const auto& row : table.rows) {
    std::vector<std::string> r;
    for (const rdf::Term& t : row) r.push_back(DisplayTerm(t, prefixes));
    cells.push_back(std::move(r));
  }
  return cells;
}

}  // namespace

std::string FormatCsv(const SolutionTable& table,
                      const vocab::PrefixTable& prefixes) {
  std::string out;
  for (const auto& row : Render(table, prefixes)) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += CsvField(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string FormatText(const SolutionTable& table,
                       const vocab::PrefixTable& prefixes) {
  const auto cells = Render(table, prefixes);
  std::vector<std::size_t> width(table.header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += row[i];
      if (i + 1 < row.size()) out += std::string(width[i] - row[i].size(), ' ');
    }
    out += '\n';
  };
  emit(cells.front());
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (std::size_t i = 1; i < cells.size(); ++i) emit(cells[i]);
  out += "(" + std::to_string(table.rows.size()) + " rows)\n";
  return out;
}

}  // namespace polkg::query
