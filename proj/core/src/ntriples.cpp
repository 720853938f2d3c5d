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

#include "polkg/ntriples.hpp"

#include <cstdint>

#include "polkg/error.hpp"

namespace polkg::rdf {
namespace {

void AppendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  // Returns false for blank and comment-only lines.
  bool Parse(Graph& graph) {
    SkipSpace();
    if (AtEnd() || Peek() == '#') return false;
    Iri subject = ReadIriRef("subject");
    SkipSpace();
    Iri predicate = ReadIriRef("predicate");
    SkipSpace();
    std::optional<Term> object;
    if (!AtEnd() && Peek() == '"') {
      object.emplace(ReadLiteral());
    } else {
      object.emplace(ReadIriRef("object"));
    }
    SkipSpace();
    if (AtEnd() || Peek() != '.') Fail("expected `.` after object");
    ++pos_;
    SkipSpace();
    if (!AtEnd() && Peek() != '#') Fail("unexpected text after `.`");
    graph.Insert(std::move(subject), std::move(predicate), std::move(*object));
    return true;
  }

 private:
  [[noreturn]] void Fail(const std::string& reason) const {
    throw ParseError(line_no_, pos_ + 1, reason);
  }

  bool AtEnd() const { return pos_ >= line_.size(); }
  char Peek() const { return line_[pos_]; }

  void SkipSpace() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t' || Peek() == '\r')) {
      ++pos_;
    }
  }

  Iri ReadIriRef(const char* role) {
    if (AtEnd()) Fail(std::string("missing ") + role);
    if (Peek() == '_') Fail("blank nodes are not supported");
    if (Peek() != '<') Fail(std::string("expected IRI for ") + role);
    const std::size_t close = line_.find('>', pos_ + 1);
    if (close == std::string_view::npos) Fail("unterminated IRI");
    std::string value(line_.substr(pos_ + 1, close - pos_ - 1));
    try {
      Iri iri(std::move(value));
      pos_ = close + 1;
      return iri;
    } catch (const ValidationError& e) {
      Fail(e.what());
    }
  }

  std::uint32_t ReadHex(std::size_t digits) {
    if (pos_ + digits > line_.size()) Fail("truncated unicode escape");
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char c = line_[pos_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<std::uint32_t>(c - 'A' + 10);
      else Fail("bad hex digit in unicode escape");
    }
    if (cp > 0x10FFFF) Fail("code point out of range");
    return cp;
  }

  Literal ReadLiteral() {
    ++pos_;  // opening quote
    std::string lexical;
    for (;;) {
      if (AtEnd()) Fail("unterminated literal");
      const char c = line_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lexical += c;
        continue;
      }
      if (AtEnd()) Fail("dangling escape");
      const char e = line_[pos_++];
      switch (e) {
        case '"': lexical += '"'; break;
        case '\\': lexical += '\\'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 't': lexical += '\t'; break;
        case 'b': lexical += '\b'; break;
        case 'f': lexical += '\f'; break;
        case '\'': lexical += '\''; break;
        case 'u': AppendUtf8(lexical, ReadHex(4)); break;
        case 'U': AppendUtf8(lexical, ReadHex(8)); break;
        default: Fail(std::string("unknown escape `\\") + e + "`");
      }
    }
    Datatype dt = Datatype::kString;
    if (!AtEnd() && Peek() == '@') Fail("language tags are not supported");
    if (line_.substr(pos_).starts_with("^^")) {
      pos_ += 2;
      if (AtEnd() || Peek() != '<') Fail("expected datatype IRI after `^^`");
      const std::size_t start = pos_;
      const Iri dt_iri = ReadIriRef("datatype");
      auto known = DatatypeFromIri(dt_iri.value());
      if (!known) {
        pos_ = start;
        Fail("unsupported datatype <" + dt_iri.value() + ">");
      }
      dt = *known;
    }
    try {
      return Literal(std::move(lexical), dt);
    } catch (const ValidationError& e) {
      Fail(e.what());
    }
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph ParseNTriples(std::string_view text) {
  Graph graph;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    LineParser(line, line_no).Parse(graph);
  }
  return graph;
}

std::string SerializeNTriples(const Graph& graph) {
  std::string out;
  for (const Triple& t : graph) {
    out += t.ToNTriples();
    out += '\n';
  }
  return out;
}

}  // namespace polkg::rdf
