// Copyright 2026 The dcatq Authors
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

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcatq::rdf {

// Namespace IRIs every component agrees on.
inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kDcatNs = "http://www.w3.org/ns/dcat#";
inline constexpr std::string_view kDctNs = "http://purl.org/dc/terms/";
inline constexpr std::string_view kDceNs = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kProvNs = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view kFoafNs = "http://xmlns.com/foaf/0.1/";

/// True if the string carries an RFC 3986 scheme ("scheme:"), which covers
/// both "://" forms and "urn:" names.
bool is_absolute_iri(std::string_view value);

/// Resolve a possibly relative IRI reference against a base IRI.
/// Absolute references are returned unchanged; an empty base leaves
/// relative references unresolved (callers decide whether that is fatal).
std::string resolve_iri(std::string_view reference, std::string_view base);

enum class TermKind { iri, blank_node, literal };

/// One RDF term: an IRI, a blank-node label, or a literal with optional
/// language tag or datatype (never both).
struct RdfTerm {
    TermKind kind = TermKind::iri;
    std::string lexical;                       // IRI string, blank label, or literal value
    std::optional<std::string> language_tag;   // literals only
    std::optional<std::string> datatype;       // literals only, absolute IRI

    static RdfTerm iri(std::string value);
    static RdfTerm blank(std::string label);
    static RdfTerm literal(std::string value, std::optional<std::string> language = {},
                           std::optional<std::string> datatype = {});

    bool is_iri() const { return kind == TermKind::iri; }
    bool is_blank() const { return kind == TermKind::blank_node; }
    bool is_literal() const { return kind == TermKind::literal; }
    /// IRIs and blank nodes both act as graph nodes.
    bool is_node() const { return kind != TermKind::literal; }

    auto operator<=>(const RdfTerm&) const = default;
};

struct Triple {
    RdfTerm subject;    // iri or blank_node
    std::string predicate;  // always an IRI
    RdfTerm object;

    auto operator<=>(const Triple&) const = default;
};

enum class RdfFormat { turtle, rdf_xml };

/// Flat, duplicate-free set of triples. Iteration order is lexicographic on
/// (subject, predicate, object), so two parses of the same bytes are
/// indistinguishable, blank-node labels included.
class TripleSet {
public:
    TripleSet() = default;
    TripleSet(std::vector<Triple> triples, RdfFormat source_format);

    const std::vector<Triple>& triples() const { return triples_; }
    RdfFormat source_format() const { return source_format_; }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    auto begin() const { return triples_.begin(); }
    auto end() const { return triples_.end(); }

private:
    std::vector<Triple> triples_;
    RdfFormat source_format_ = RdfFormat::turtle;
};

/// Parse a Turtle or RDF/XML document into a TripleSet.
///
/// Blank nodes receive sequential labels ("_:b0", "_:b1", ...) in order of
/// first appearance, so the result is deterministic per document. Relative
/// IRIs resolve against the document base (@base / xml:base) or, failing
/// that, `base_iri`.
///
/// Throws SyntaxError on malformed input and EncodingError on invalid UTF-8.
TripleSet parse_rdf(std::string_view content, RdfFormat format, std::string_view base_iri = {});

// Internal entry points, one per serialization. parse_rdf dispatches here
// after the UTF-8 check.
std::vector<Triple> parse_turtle(std::string_view content, std::string_view base_iri);
std::vector<Triple> parse_rdf_xml(std::string_view content, std::string_view base_iri);

/// Validate that `bytes` is well-formed UTF-8; throws EncodingError if not.
void require_utf8(std::string_view bytes);

}  // namespace dcatq::rdf
