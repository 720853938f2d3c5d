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

#include "polkg/rdf.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "polkg/error.hpp"

namespace polkg::rdf {
namespace {

bool IsForbiddenIriChar(unsigned char c) {
  return c <= 0x20 || c == 0x7F || c == '<' || c == '>' || c == '"';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool ValidInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), IsDigit);
}

bool ValidDecimal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  const auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  if (dot != std::string_view::npos && frac.empty()) return false;
  return std::all_of(whole.begin(), whole.end(), IsDigit) &&
         std::all_of(frac.begin(), frac.end(), IsDigit);
}

constexpr std::array<std::string_view, 4> kDatatypeNames = {
    "string", "integer", "decimal", "dateTime"};

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw ValidationError("IRI must not be empty");
  for (unsigned char c : value_) {
    if (IsForbiddenIriChar(c)) {
      throw ValidationError("IRI `" + value_ +
                            "` contains a forbidden character");
    }
  }
  if (value_.find(':') == std::string::npos) {
    throw ValidationError("IRI `" + value_ + "` has no scheme separator");
  }
}

std::string_view DatatypeIri(Datatype dt) {
  static const std::array<std::string, 4> iris = [] {
    std::array<std::string, 4> out;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = std::string(kXsdNamespace) + std::string(kDatatypeNames[i]);
    }
    return out;
  }();
  return iris[static_cast<std::size_t>(dt)];
}

std::optional<Datatype> DatatypeFromIri(std::string_view iri) {
  if (!iri.starts_with(kXsdNamespace)) return std::nullopt;
  iri.remove_prefix(kXsdNamespace.size());
  for (std::size_t i = 0; i < kDatatypeNames.size(); ++i) {
    if (iri == kDatatypeNames[i]) return static_cast<Datatype>(i);
  }
  return std::nullopt;
}

Literal::Literal(std::string lexical, Datatype datatype)
    : lexical_(std::move(lexical)), datatype_(datatype) {
  bool ok = true;
  switch (datatype_) {
    case Datatype::kString:
      break;
    case Datatype::kInteger:
      ok = ValidInteger(lexical_);
      if (ok) {
        std::int64_t v = 0;
        const char* first = lexical_.data() + (lexical_[0] == '+' ? 1 : 0);
        ok = std::from_chars(first, lexical_.data() + lexical_.size(), v).ec ==
             std::errc();
      }
      break;
    case Datatype::kDecimal:
      ok = ValidDecimal(lexical_);
      break;
    case Datatype::kDateTime:
      ok = lexical_.size() == 19 && lexical_[10] == 'T' &&
           DateTime::Parse(lexical_).has_value();
      break;
  }
  if (!ok) {
    throw ValidationError(
        "invalid " +
        std::string(kDatatypeNames[static_cast<std::size_t>(datatype_)]) +
        " literal `" + lexical_ + "`");
  }
}

Literal Literal::String(std::string value) {
  return Literal(std::move(value), Datatype::kString);
}

Literal Literal::Integer(std::int64_t value) {
  return Literal(std::to_string(value), Datatype::kInteger);
}

Literal Literal::Decimal(double value) {
  if (!std::isfinite(value)) {
    throw ValidationError("decimal literal must be finite");
  }
  char buf[1024];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed);
  if (res.ec != std::errc()) throw ValidationError("decimal out of range");
  std::string text(buf, res.ptr);
  if (text.find('.') == std::string::npos) text += ".0";
  return Literal(std::move(text), Datatype::kDecimal);
}

Literal Literal::DateTimeValue(const DateTime& value) {
  return Literal(value.ToIso(), Datatype::kDateTime);
}

std::int64_t Literal::AsInteger() const {
  if (datatype_ != Datatype::kInteger) {
    throw ValidationError("literal `" + lexical_ + "` is not an integer");
  }
  std::int64_t v = 0;
  const char* first = lexical_.data() + (lexical_[0] == '+' ? 1 : 0);
  std::from_chars(first, lexical_.data() + lexical_.size(), v);
  return v;
}

double Literal::AsDecimal() const {
  if (datatype_ != Datatype::kDecimal && datatype_ != Datatype::kInteger) {
    throw ValidationError("literal `" + lexical_ + "` is not numeric");
  }
  double v = 0;
  const char* first = lexical_.data() + (lexical_[0] == '+' ? 1 : 0);
  std::from_chars(first, lexical_.data() + lexical_.size(), v);
  return v;
}

DateTime Literal::AsDateTime() const {
  if (datatype_ != Datatype::kDateTime) {
    throw ValidationError("literal `" + lexical_ + "` is not a dateTime");
  }
  return DateTime::ParseOrThrow(lexical_);
}

std::string EscapeString(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

Term::Term(Iri iri) : value_(std::move(iri)) {
  key_ = "<" + std::get<Iri>(value_).value() + ">";
}

Term::Term(Literal literal) : value_(std::move(literal)) {
  const Literal& lit = std::get<Literal>(value_);
  key_ = "\"" + EscapeString(lit.lexical()) + "\"";
  if (lit.datatype() != Datatype::kString) {
    key_ += "^^<" + std::string(DatatypeIri(lit.datatype())) + ">";
  }
}

const Iri& Term::iri() const {
  if (!is_iri()) throw ValidationError("term " + key_ + " is not an IRI");
  return std::get<Iri>(value_);
}

const Literal& Term::literal() const {
  if (!is_literal()) {
    throw ValidationError("term " + key_ + " is not a literal");
  }
  return std::get<Literal>(value_);
}

Triple::Triple(Iri subject, Iri predicate, Term object)
    : subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      object_(std::move(object)) {}

std::string Triple::ToNTriples() const {
  return subject_.ToNTriples() + " " + predicate_.ToNTriples() + " " +
         object_.ToNTriples() + " .";
}

Graph::Graph(const Graph& other) : triples_(other.triples_) { Rebuild(); }

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    triples_ = other.triples_;
    Rebuild();
  }
  return *this;
}

void Graph::Rebuild() {
  by_subject_.clear();
  by_predicate_.clear();
  by_object_.clear();
  for (const Triple& t : triples_) {
    by_subject_[t.subject_term().ToNTriples()].push_back(&t);
    by_predicate_[t.predicate_term().ToNTriples()].push_back(&t);
    by_object_[t.object().ToNTriples()].push_back(&t);
  }
}

bool Graph::Insert(Triple triple) {
  auto [it, inserted] = triples_.insert(std::move(triple));
  if (!inserted) return false;
  const Triple* t = &*it;
  by_subject_[t->subject_term().ToNTriples()].push_back(t);
  by_predicate_[t->predicate_term().ToNTriples()].push_back(t);
  by_object_[t->object().ToNTriples()].push_back(t);
  return true;
}

void Graph::InsertAll(const Graph& other) {
  for (const Triple& t : other) Insert(t);
}

const std::vector<const Triple*>* Graph::Candidates(
    const std::optional<Iri>& subject, const std::optional<Iri>& predicate,
    const std::optional<Term>& object) const {
  static const std::vector<const Triple*> kEmpty;
  const std::vector<const Triple*>* best = nullptr;
  auto consider = [&](const Index& index, const std::string& key) {
    auto it = index.find(key);
    const auto* list = it == index.end() ? &kEmpty : &it->second;
    if (best == nullptr || list->size() < best->size()) best = list;
  };
  if (subject) consider(by_subject_, Term(*subject).ToNTriples());
  if (predicate) consider(by_predicate_, Term(*predicate).ToNTriples());
  if (object) consider(by_object_, object->ToNTriples());
  return best;
}

std::vector<Triple> Graph::Match(const std::optional<Iri>& subject,
                                 const std::optional<Iri>& predicate,
                                 const std::optional<Term>& object) const {
  const auto* candidates = Candidates(subject, predicate, object);
  if (candidates == nullptr) return {triples_.begin(), triples_.end()};
  std::vector<Triple> out;
  for (const Triple* t : *candidates) {
    if (subject && t->subject() != *subject) continue;
    if (predicate && t->predicate() != *predicate) continue;
    if (object && t->object() != *object) continue;
    out.push_back(*t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::Count(const std::optional<Iri>& subject,
                         const std::optional<Iri>& predicate,
                         const std::optional<Term>& object) const {
  const auto* candidates = Candidates(subject, predicate, object);
  if (candidates == nullptr) return triples_.size();
  return static_cast<std::size_t>(std::count_if(
      candidates->begin(), candidates->end(), [&](const Triple* t) {
        return (!subject || t->subject() == *subject) &&
               (!predicate || t->predicate() == *predicate) &&
               (!object || t->object() == *object);
      }));
}

}  // namespace polkg::rdf
