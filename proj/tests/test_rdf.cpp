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

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "dcatq/errors.hpp"
#include "dcatq/rdf.hpp"

using namespace dcatq::rdf;
using dcatq::EncodingError;
using dcatq::SyntaxError;

namespace {

std::string rdfns(const char* local) { return std::string(kRdfNs) + local; }
std::string xsd(const char* local) { return std::string(kXsdNs) + local; }

bool has(const TripleSet& set, const Triple& triple) {
    return std::find(set.begin(), set.end(), triple) != set.end();
}

TripleSet ttl(std::string_view text, std::string_view base = {}) {
    return parse_rdf(text, RdfFormat::turtle, base);
}

TripleSet xml(std::string_view text, std::string_view base = {}) {
    return parse_rdf(text, RdfFormat::rdf_xml, base);
}

}  // namespace

TEST_SUITE("rdf") {

TEST_CASE("iri helpers") {
    CHECK(is_absolute_iri("http://example.org/x"));
    CHECK(is_absolute_iri("urn:isbn:12345"));
    CHECK(is_absolute_iri("a+b-c.d:rest"));
    CHECK_FALSE(is_absolute_iri("relative/path"));
    CHECK_FALSE(is_absolute_iri("#fragment"));
    CHECK_FALSE(is_absolute_iri(""));
    CHECK_FALSE(is_absolute_iri("1http://x"));

    CHECK(resolve_iri("c", "http://b.org/a/b") == "http://b.org/a/c");
    CHECK(resolve_iri("../d", "http://b.org/a/b") == "http://b.org/d");
    CHECK(resolve_iri("/root", "http://b.org/a/b") == "http://b.org/root");
    CHECK(resolve_iri("//other.org/x", "http://b.org/a/b") == "http://other.org/x");
    CHECK(resolve_iri("#frag", "http://b.org/a/b") == "http://b.org/a/b#frag");
    CHECK(resolve_iri("?q=1", "http://b.org/a/b") == "http://b.org/a/b?q=1");
    CHECK(resolve_iri("http://abs.org/x", "http://b.org/") == "http://abs.org/x");
    CHECK(resolve_iri("x", "") == "x");
    CHECK(resolve_iri("", "http://b.org/a?q") == "http://b.org/a?q");
}

TEST_CASE("turtle basics with prefixes and the a keyword") {
    auto set = ttl(
        "@prefix dct: <http://purl.org/dc/terms/> .\n"
        "<http://e/s> a <http://e/T> ;\n"
        "    dct:title \"Hello\" .\n");
    REQUIRE(set.size() == 2);
    CHECK(set.source_format() == RdfFormat::turtle);
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://purl.org/dc/terms/title",
                    RdfTerm::literal("Hello")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), std::string(kRdfType), RdfTerm::iri("http://e/T")}));
}

TEST_CASE("turtle sparql-style directives have no trailing dot") {
    auto set = ttl(
        "PREFIX ex: <http://example.org/>\n"
        "base <http://base.org/dir/>\n"
        "ex:s ex:p <item> .\n");
    REQUIRE(set.size() == 1);
    CHECK(has(set, {RdfTerm::iri("http://example.org/s"), "http://example.org/p",
                    RdfTerm::iri("http://base.org/dir/item")}));
}

TEST_CASE("turtle base directive governs relative references") {
    auto set = ttl(
        "@base <http://b.org/a/b> .\n"
        "<c> <http://p/p> <../d> .\n");
    REQUIRE(set.size() == 1);
    CHECK(has(set, {RdfTerm::iri("http://b.org/a/c"), "http://p/p", RdfTerm::iri("http://b.org/d")}));
}

TEST_CASE("caller base applies when the document declares none") {
    auto set = ttl("<s> <http://p/p> <o> .", "http://ex.org/dir/");
    REQUIRE(set.size() == 1);
    CHECK(has(set, {RdfTerm::iri("http://ex.org/dir/s"), "http://p/p",
                    RdfTerm::iri("http://ex.org/dir/o")}));
}

TEST_CASE("relative IRI without a base is an error") {
    CHECK_THROWS_AS(ttl("<s> <http://p/p> <o> ."), SyntaxError);
}

TEST_CASE("turtle blank node labels are renumbered in appearance order") {
    auto set = ttl(
        "_:x <http://p/a> _:y .\n"
        "_:y <http://p/b> _:x .\n"
        "[] <http://p/c> [ <http://p/d> \"v\" ] .\n");
    REQUIRE(set.size() == 4);
    CHECK(has(set, {RdfTerm::blank("_:b0"), "http://p/a", RdfTerm::blank("_:b1")}));
    CHECK(has(set, {RdfTerm::blank("_:b1"), "http://p/b", RdfTerm::blank("_:b0")}));
    CHECK(has(set, {RdfTerm::blank("_:b2"), "http://p/c", RdfTerm::blank("_:b3")}));
    CHECK(has(set, {RdfTerm::blank("_:b3"), "http://p/d", RdfTerm::literal("v")}));
}

TEST_CASE("turtle collections expand to first/rest chains") {
    auto set = ttl(
        "<http://e/s> <http://e/p> (\"x\" \"y\") .\n"
        "<http://e/s> <http://e/q> () .\n");
    REQUIRE(set.size() == 6);
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p", RdfTerm::blank("_:b0")}));
    CHECK(has(set, {RdfTerm::blank("_:b0"), rdfns("first"), RdfTerm::literal("x")}));
    CHECK(has(set, {RdfTerm::blank("_:b0"), rdfns("rest"), RdfTerm::blank("_:b1")}));
    CHECK(has(set, {RdfTerm::blank("_:b1"), rdfns("first"), RdfTerm::literal("y")}));
    CHECK(has(set, {RdfTerm::blank("_:b1"), rdfns("rest"), RdfTerm::iri(rdfns("nil"))}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/q", RdfTerm::iri(rdfns("nil"))}));
}

TEST_CASE("turtle numeric and boolean shorthand carry xsd datatypes") {
    auto set = ttl("<http://e/s> <http://e/p> 42, -3.14, 1.0e6, true .");
    REQUIRE(set.size() == 4);
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p",
                    RdfTerm::literal("42", {}, xsd("integer"))}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p",
                    RdfTerm::literal("-3.14", {}, xsd("decimal"))}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p",
                    RdfTerm::literal("1.0e6", {}, xsd("double"))}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p",
                    RdfTerm::literal("true", {}, xsd("boolean"))}));
}

TEST_CASE("turtle language tags and datatype annotations") {
    auto set = ttl(
        "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
        "<http://e/s> <http://e/p> \"hello\"@en-US .\n"
        "<http://e/s> <http://e/q> \"2024-01-01\"^^xsd:date .\n"
        "<http://e/s> <http://e/r> \"7\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n");
    REQUIRE(set.size() == 3);
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p",
                    RdfTerm::literal("hello", "en-US")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/q",
                    RdfTerm::literal("2024-01-01", {}, xsd("date"))}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/r",
                    RdfTerm::literal("7", {}, xsd("integer"))}));
}

TEST_CASE("turtle string forms and escapes") {
    auto set = ttl(
        "<http://e/s> <http://e/p1> \"a\\tb\\u0041\\U0001F600\" .\n"
        "<http://e/s> <http://e/p2> \"\"\"line1\nline2 \"q\" done\"\"\" .\n"
        "<http://e/s> <http://e/p3> 'single' .\n"
        "<http://e/s> <http://e/p4> '''long\nsingle''' .\n"
        "<http://e/s> <http://e/p5> \"\" .\n");
    REQUIRE(set.size() == 5);
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p1",
                    RdfTerm::literal("a\tbA\xF0\x9F\x98\x80")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p2",
                    RdfTerm::literal("line1\nline2 \"q\" done")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p3", RdfTerm::literal("single")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p4", RdfTerm::literal("long\nsingle")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p5", RdfTerm::literal("")}));
}

TEST_CASE("turtle trailing semicolon and interior-dot local names") {
    auto set = ttl(
        "@prefix ex: <http://e/> .  # comment\n"
        "ex:a.b ex:p \"one\" ; ex:q \"two\" ; .\n");
    REQUIRE(set.size() == 2);
    CHECK(has(set, {RdfTerm::iri("http://e/a.b"), "http://e/p", RdfTerm::literal("one")}));
    CHECK(has(set, {RdfTerm::iri("http://e/a.b"), "http://e/q", RdfTerm::literal("two")}));
}

TEST_CASE("turtle syntax errors carry line numbers") {
    try {
        ttl("@prefix ex: <http://e/> .\nfoo:x ex:p \"v\" .\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(ttl("<http://e/s> <http://e/p> \"unterminated"), SyntaxError);
    CHECK_THROWS_AS(ttl("<http://e/s> <http://e/p> \"new\nline\" ."), SyntaxError);
    CHECK_THROWS_AS(ttl("<http://e/s> <http://e/p> \"v\""), SyntaxError);
    CHECK_THROWS_AS(ttl("@unknown <http://e/> ."), SyntaxError);
    CHECK_THROWS_AS(ttl("<http://e/ s> <http://e/p> \"v\" ."), SyntaxError);
}

TEST_CASE("invalid utf-8 is an encoding error") {
    CHECK_THROWS_AS(ttl("<http://e/s> <http://e/p> \"\x80\" ."), EncodingError);
    CHECK_THROWS_AS(ttl("<http://e/s> <http://e/p> \"\xC3\" ."), EncodingError);
    CHECK_THROWS_AS(ttl("<http://e/s> <http://e/p> \"\xC0\xAF\" ."), EncodingError);
    CHECK_NOTHROW(ttl("<http://e/s> <http://e/p> \"caf\xC3\xA9\" ."));
}

TEST_CASE("triple sets deduplicate and sort") {
    auto set = ttl(
        "<http://e/b> <http://e/p> \"v\" .\n"
        "<http://e/a> <http://e/p> \"v\" .\n"
        "<http://e/a> <http://e/p> \"v\" .\n");
    REQUIRE(set.size() == 2);
    CHECK(set.triples()[0].subject.lexical == "http://e/a");
    CHECK(set.triples()[1].subject.lexical == "http://e/b");

    TripleSet direct({{RdfTerm::iri("http://e/x"), "http://e/q", RdfTerm::literal("1")},
                      {RdfTerm::iri("http://e/x"), "http://e/p", RdfTerm::literal("1")},
                      {RdfTerm::iri("http://e/x"), "http://e/p", RdfTerm::literal("1")}},
                     RdfFormat::turtle);
    REQUIRE(direct.size() == 2);
    CHECK(direct.triples()[0].predicate == "http://e/p");
}

TEST_CASE("parsing the same document twice is bit-identical") {
    const char* doc =
        "@prefix ex: <http://e/> .\n"
        "_:m ex:p [ ex:q (\"a\" \"b\") ] .\n";
    auto first = ttl(doc);
    auto second = ttl(doc);
    CHECK(first.triples() == second.triples());
}

TEST_CASE("rdfxml description elements and literals") {
    auto set = xml(
        "<?xml version=\"1.0\"?>\n"
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
        "         xmlns:dct=\"http://purl.org/dc/terms/\">\n"
        "  <rdf:Description rdf:about=\"http://e/s\">\n"
        "    <dct:title xml:lang=\"en\">Hello</dct:title>\n"
        "    <dct:issued rdf:datatype=\"http://www.w3.org/2001/XMLSchema#date\">2024-01-01</dct:issued>\n"
        "  </rdf:Description>\n"
        "</rdf:RDF>\n");
    REQUIRE(set.size() == 2);
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://purl.org/dc/terms/title",
                    RdfTerm::literal("Hello", "en")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://purl.org/dc/terms/issued",
                    RdfTerm::literal("2024-01-01", {}, xsd("date"))}));
}

TEST_CASE("rdfxml typed nodes emit rdf:type") {
    auto set = xml(
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
        "         xmlns:dcat=\"http://www.w3.org/ns/dcat#\">\n"
        "  <dcat:Dataset rdf:about=\"http://e/d\">\n"
        "    <dcat:distribution rdf:resource=\"http://e/dist\"/>\n"
        "  </dcat:Dataset>\n"
        "</rdf:RDF>\n");
    REQUIRE(set.size() == 2);
    CHECK(has(set, {RdfTerm::iri("http://e/d"), std::string(kRdfType),
                    RdfTerm::iri(std::string(kDcatNs) + "Dataset")}));
    CHECK(has(set, {RdfTerm::iri("http://e/d"), std::string(kDcatNs) + "distribution",
                    RdfTerm::iri("http://e/dist")}));
}

TEST_CASE("rdfxml property attributes and inherited language") {
    auto set = xml(
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
        "         xmlns:dct=\"http://purl.org/dc/terms/\" xml:lang=\"de\">\n"
        "  <rdf:Description rdf:about=\"http://e/s\" dct:identifier=\"id-1\">\n"
        "    <dct:title>Titel</dct:title>\n"
        "    <dct:description xml:lang=\"\">plain</dct:description>\n"
        "  </rdf:Description>\n"
        "</rdf:RDF>\n");
    REQUIRE(set.size() == 3);
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://purl.org/dc/terms/identifier",
                    RdfTerm::literal("id-1", "de")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://purl.org/dc/terms/title",
                    RdfTerm::literal("Titel", "de")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://purl.org/dc/terms/description",
                    RdfTerm::literal("plain")}));
}

TEST_CASE("rdfxml nested node elements and parse types") {
    auto set = xml(
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
        "         xmlns:ex=\"http://e/\">\n"
        "  <rdf:Description rdf:about=\"http://e/s\">\n"
        "    <ex:nested>\n"
        "      <rdf:Description rdf:about=\"http://e/inner\"/>\n"
        "    </ex:nested>\n"
        "    <ex:group rdf:parseType=\"Resource\">\n"
        "      <ex:leaf>v</ex:leaf>\n"
        "    </ex:group>\n"
        "    <ex:list rdf:parseType=\"Collection\">\n"
        "      <rdf:Description rdf:about=\"http://e/i1\"/>\n"
        "    </ex:list>\n"
        "    <ex:markup rdf:parseType=\"Literal\">raw <b>bold</b> text</ex:markup>\n"
        "  </rdf:Description>\n"
        "</rdf:RDF>\n");
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/nested", RdfTerm::iri("http://e/inner")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/group", RdfTerm::blank("_:b0")}));
    CHECK(has(set, {RdfTerm::blank("_:b0"), "http://e/leaf", RdfTerm::literal("v")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/list", RdfTerm::blank("_:b1")}));
    CHECK(has(set, {RdfTerm::blank("_:b1"), rdfns("first"), RdfTerm::iri("http://e/i1")}));
    CHECK(has(set, {RdfTerm::blank("_:b1"), rdfns("rest"), RdfTerm::iri(rdfns("nil"))}));
    bool found_literal = false;
    for (const Triple& t : set) {
        if (t.predicate == "http://e/markup") {
            found_literal = t.object.is_literal() &&
                            t.object.lexical.find("bold") != std::string::npos;
        }
    }
    CHECK(found_literal);
}

TEST_CASE("rdfxml ID nodeID li and base") {
    auto set = xml(
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
        "         xmlns:ex=\"http://e/\" xml:base=\"http://base.org/doc\">\n"
        "  <rdf:Description rdf:ID=\"frag\">\n"
        "    <ex:rel rdf:nodeID=\"n1\"/>\n"
        "    <ex:li1 rdf:resource=\"other\"/>\n"
        "  </rdf:Description>\n"
        "  <rdf:Description rdf:nodeID=\"n1\">\n"
        "    <rdf:li>first</rdf:li>\n"
        "    <rdf:li>second</rdf:li>\n"
        "  </rdf:Description>\n"
        "</rdf:RDF>\n");
    REQUIRE(set.size() == 4);
    CHECK(has(set, {RdfTerm::iri("http://base.org/doc#frag"), "http://e/rel",
                    RdfTerm::blank("_:b0")}));
    CHECK(has(set, {RdfTerm::iri("http://base.org/doc#frag"), "http://e/li1",
                    RdfTerm::iri("http://base.org/other")}));
    CHECK(has(set, {RdfTerm::blank("_:b0"), rdfns("_1"), RdfTerm::literal("first")}));
    CHECK(has(set, {RdfTerm::blank("_:b0"), rdfns("_2"), RdfTerm::literal("second")}));
}

TEST_CASE("rdfxml entities and cdata") {
    auto set = xml(
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
        "         xmlns:ex=\"http://e/\">\n"
        "  <rdf:Description rdf:about=\"http://e/s\">\n"
        "    <ex:p>A &amp; B &lt;tag&gt; &#65;&#x42;</ex:p>\n"
        "    <ex:q><![CDATA[<raw & data>]]></ex:q>\n"
        "  </rdf:Description>\n"
        "</rdf:RDF>\n");
    REQUIRE(set.size() == 2);
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/p",
                    RdfTerm::literal("A & B <tag> AB")}));
    CHECK(has(set, {RdfTerm::iri("http://e/s"), "http://e/q",
                    RdfTerm::literal("<raw & data>")}));
}

TEST_CASE("rdfxml errors") {
    CHECK_THROWS_AS(xml("<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">"
                        "<rdf:Description rdf:about=\"http://e/s\"></rdf:RDF>"),
                    SyntaxError);
    CHECK_THROWS_AS(xml("<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">"
                        "<rdf:Description rdf:about=\"relative\"/></rdf:RDF>"),
                    SyntaxError);
    CHECK_THROWS_AS(xml("not xml at all"), SyntaxError);
}

}  // TEST_SUITE
