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

#ifndef POLKG_RDF_HPP_
#define POLKG_RDF_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "polkg/datetime.hpp"

namespace polkg::rdf {

inline constexpr std::string_view kXsdNamespace =
    "http://www.w3.org/2001/XMLSchema#";

// An absolute IRI: non-empty, no whitespace or control characters, no
// `<`, `>` or `"`, and a scheme separator.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& value() const { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

enum class Datatype { kString, kInteger, kDecimal, kDateTime };

std::string_view DatatypeIri(Datatype dt);
std::optional<Datatype> DatatypeFromIri(std::string_view iri);

// A typed literal. The lexical form is validated against the datatype:
// integers are base-10, decimals are finite `[+-]digits[.digits]`, and
// dateTimes are `YYYY-MM-DDThh:mm:ss`.
class Literal {
 public:
  Literal(std::string lexical, Datatype datatype);

  static Literal String(std::string value);
  static Literal Integer(std::int64_t value);
  // Shortest fixed-notation form that round-trips to the same double.
  static Literal Decimal(double value);
  static Literal DateTimeValue(const DateTime& value);

  const std::string& lexical() const { return lexical_; }
  Datatype datatype() const { return datatype_; }

  std::int64_t AsInteger() const;
  double AsDecimal() const;
  DateTime AsDateTime() const;

  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  std::string lexical_;
  Datatype datatype_;
};

// IRI or literal. Ordering and equality follow the N-Triples serialization.
class Term {
 public:
  Term(Iri iri);          // NOLINT(google-explicit-constructor)
  Term(Literal literal);  // NOLINT(google-explicit-constructor)

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }
  const Iri& iri() const;
  const Literal& literal() const;

  const std::string& ToNTriples() const { return key_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.key_ <=> b.key_;
  }

 private:
  std::variant<Iri, Literal> value_;
  std::string key_;
};

class Triple {
 public:
  Triple(Iri subject, Iri predicate, Term object);

  const Iri& subject() const { return subject_.iri(); }
  const Iri& predicate() const { return predicate_.iri(); }
  const Term& object() const { return object_; }
  const Term& subject_term() const { return subject_; }
  const Term& predicate_term() const { return predicate_; }

  // `<s> <p> o .` without a trailing newline.
  std::string ToNTriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&,
                                          const Triple&) = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

inline constexpr std::nullopt_t kAny = std::nullopt;

// Set of triples with subject, predicate and object indexes.
//
// Mutation requires exclusive access; concurrent const access is safe once
// the graph is no longer being modified.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  Graph(const Graph& other);
  Graph& operator=(const Graph& other);
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;

  // Returns true iff the triple was not already present.
  bool Insert(Triple triple);
  bool Insert(Iri subject, Iri predicate, Term object) {
    return Insert(Triple(std::move(subject), std::move(predicate),
                         std::move(object)));
  }
  void InsertAll(const Graph& other);

  bool Contains(const Triple& triple) const {
    return triples_.contains(triple);
  }

  // Triples agreeing with every bound position, sorted by serialization.
  std::vector<Triple> Match(const std::optional<Iri>& subject,
                            const std::optional<Iri>& predicate,
                            const std::optional<Term>& object) const;
  std::size_t Count(const std::optional<Iri>& subject,
                    const std::optional<Iri>& predicate,
                    const std::optional<Term>& object) const;

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.triples_ == b.triples_;
  }

 private:
  using Index = std::unordered_map<std::string, std::vector<const Triple*>>;

  const std::vector<const Triple*>* Candidates(
      const std::optional<Iri>& subject, const std::optional<Iri>& predicate,
      const std::optional<Term>& object) const;
  void Rebuild();

  std::set<Triple> triples_;
  Index by_subject_;
  Index by_predicate_;
  Index by_object_;
};

// Escapes a string for use between double quotes in N-Triples / SPARQL.
std::string EscapeString(std::string_view raw);

}  // namespace polkg::rdf

#endif  // POLKG_RDF_HPP_
