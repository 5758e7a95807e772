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

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcatq/errors.hpp"
#include "dcatq/rdf.hpp"

namespace dcatq::rdf {
namespace {

// ---------------------------------------------------------------------------
// Minimal non-validating XML reader: elements, attributes, character data,
// comments, CDATA, and the five predefined entities plus numeric references.
// ---------------------------------------------------------------------------

struct XmlAttr {
    std::string name;   // raw qualified name, e.g. "rdf:about"
    std::string value;
};

struct XmlNode {
    std::string name;               // raw qualified name
    std::vector<XmlAttr> attrs;
    std::vector<XmlNode> children;
    std::string text;               // concatenated character data
    unsigned line = 0;
};

class XmlReader {
public:
    explicit XmlReader(std::string_view input) : input_(input) {}

    XmlNode parse_document() {
        skip_prolog();
        XmlNode root = parse_element();
        skip_misc();
        if (pos_ < input_.size()) fail("content after document element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(line_, message); }

    char peek() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }

    char get() {
        if (pos_ >= input_.size()) fail("unexpected end of input");
        char c = input_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }

    bool consume(std::string_view token) {
        if (input_.substr(pos_).starts_with(token)) {
            for (std::size_t i = 0; i < token.size(); ++i) get();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) get();
    }

    void skip_until(std::string_view terminator) {
        while (pos_ < input_.size()) {
            if (consume(terminator)) return;
            get();
        }
        fail("unterminated construct, expected '" + std::string(terminator) + "'");
    }

    void skip_prolog() {
        for (;;) {
            skip_ws();
            if (consume("<?")) { skip_until("?>"); continue; }
            if (consume("<!--")) { skip_until("-->"); continue; }
            if (consume("<!")) { skip_until(">"); continue; }  // DOCTYPE
            return;
        }
    }

    void skip_misc() {
        for (;;) {
            skip_ws();
            if (consume("<!--")) { skip_until("-->"); continue; }
            if (consume("<?")) { skip_until("?>"); continue; }
            return;
        }
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
               c == ':' || static_cast<unsigned char>(c) >= 0x80;
    }

    std::string read_name() {
        std::string name;
        while (pos_ < input_.size() && name_char(input_[pos_])) name += get();
        if (name.empty()) fail("XML name expected");
        return name;
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        for (std::size_t i = 0; i < raw.size();) {
            if (raw[i] != '&') { out += raw[i++]; continue; }
            auto end = raw.find(';', i);
            if (end == std::string_view::npos) fail("unterminated entity reference");
            std::string_view name = raw.substr(i + 1, end - i - 1);
            if (name == "amp") out += '&';
            else if (name == "lt") out += '<';
            else if (name == "gt") out += '>';
            else if (name == "quot") out += '"';
            else if (name == "apos") out += '\'';
            else if (!name.empty() && name[0] == '#') {
                unsigned code = 0;
                if (name.size() > 1 && (name[1] == 'x' || name[1] == 'X'))
                    code = static_cast<unsigned>(std::stoul(std::string(name.substr(2)), nullptr, 16));
                else
                    code = static_cast<unsigned>(std::stoul(std::string(name.substr(1))));
                // UTF-8 encode
                if (code < 0x80) { out += static_cast<char>(code); }
                else if (code < 0x800) {
                    out += static_cast<char>(0xC0 | (code >> 6));
                    out += static_cast<char>(0x80 | (code & 0x3F));
                } else if (code < 0x10000) {
                    out += static_cast<char>(0xE0 | (code >> 12));
                    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                    out += static_cast<char>(0x80 | (code & 0x3F));
                } else {
                    out += static_cast<char>(0xF0 | (code >> 18));
                    out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
                    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                    out += static_cast<char>(0x80 | (code & 0x3F));
                }
            } else {
                fail("unknown entity &" + std::string(name) + ";");
            }
            i = end + 1;
        }
        return out;
    }

    XmlNode parse_element() {
        if (!consume("<")) fail("'<' expected");
        XmlNode node;
        node.line = line_;
        node.name = read_name();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '/') {
                get();
                if (!consume(">")) fail("'>' expected after '/'");
                return node;  // self-closing
            }
            if (c == '>') { get(); break; }
            XmlAttr attr;
            attr.name = read_name();
            skip_ws();
            if (!consume("=")) fail("'=' expected in attribute");
            skip_ws();
            char quote = get();
            if (quote != '"' && quote != '\'') fail("quoted attribute value expected");
            std::string raw;
            for (;;) {
                char v = get();
                if (v == quote) break;
                raw += v;
            }
            attr.value = decode_entities(raw);
            node.attrs.push_back(std::move(attr));
        }
        // Content until matching end tag.
        for (;;) {
            if (consume("<!--")) { skip_until("-->"); continue; }
            if (consume("<![CDATA[")) {
                std::size_t start = pos_;
                while (pos_ < input_.size() && !input_.substr(pos_).starts_with("]]>")) get();
                node.text += std::string(input_.substr(start, pos_ - start));
                if (!consume("]]>")) fail("unterminated CDATA section");
                continue;
            }
            if (consume("<?")) { skip_until("?>"); continue; }
            if (input_.substr(pos_).starts_with("</")) {
                consume("</");
                std::string closing = read_name();
                if (closing != node.name)
                    fail("mismatched end tag </" + closing + ">, expected </" + node.name + ">");
                skip_ws();
                if (!consume(">")) fail("'>' expected in end tag");
                return node;
            }
            if (peek() == '<') {
                node.children.push_back(parse_element());
                continue;
            }
            std::size_t start = pos_;
            while (pos_ < input_.size() && input_[pos_] != '<') get();
            if (pos_ >= input_.size()) fail("unterminated element <" + node.name + ">");
            node.text += decode_entities(input_.substr(start, pos_ - start));
        }
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    unsigned line_ = 1;
};

// ---------------------------------------------------------------------------
// RDF/XML to triples, namespace- and xml:base/xml:lang-aware.
// ---------------------------------------------------------------------------

struct Scope {
    std::map<std::string, std::string> namespaces;  // prefix ("" = default) -> IRI
    std::string base;
    std::string lang;
};

class RdfXmlParser {
public:
    RdfXmlParser(std::string_view input, std::string_view base) : reader_(input) {
        root_scope_.base = std::string(base);
        root_scope_.namespaces["xml"] = "http://www.w3.org/XML/1998/namespace";
    }

    std::vector<Triple> run() {
        XmlNode root = reader_.parse_document();
        Scope scope = enter(root, root_scope_);
        if (expand_name(root.name, scope, true) == std::string(kRdfNs) + "RDF") {
            for (const XmlNode& child : root.children) parse_node_element(child, scope);
        } else {
            parse_node_element(root, scope);
        }
        return std::move(triples_);
    }

private:
    [[noreturn]] static void fail(const XmlNode& node, const std::string& message) {
        throw SyntaxError(node.line, message);
    }

    static bool is_ws(const std::string& s) {
        return std::all_of(s.begin(), s.end(),
                           [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    }

    Scope enter(const XmlNode& node, const Scope& parent) {
        Scope scope = parent;
        for (const XmlAttr& a : node.attrs) {
            if (a.name == "xmlns") scope.namespaces[""] = a.value;
            else if (a.name.rfind("xmlns:", 0) == 0) scope.namespaces[a.name.substr(6)] = a.value;
            else if (a.name == "xml:base") scope.base = resolve_iri(a.value, parent.base);
            else if (a.name == "xml:lang") scope.lang = a.value;
        }
        return scope;
    }

    std::string expand_name(const std::string& qname, const Scope& scope, bool is_element) const {
        auto colon = qname.find(':');
        std::string prefix = colon == std::string::npos ? "" : qname.substr(0, colon);
        std::string local = colon == std::string::npos ? qname : qname.substr(colon + 1);
        if (prefix.empty() && !is_element) return local;  // unprefixed attribute: no namespace
        auto it = scope.namespaces.find(prefix);
        if (it == scope.namespaces.end()) {
            if (prefix.empty()) return local;
            throw SyntaxError(0, "undeclared XML namespace prefix '" + prefix + "'");
        }
        return it->second + local;
    }

    static bool syntax_attr(const std::string& expanded) {
        static const std::string rdf(kRdfNs);
        return expanded == rdf + "about" || expanded == rdf + "ID" || expanded == rdf + "nodeID" ||
               expanded == rdf + "resource" || expanded == rdf + "datatype" ||
               expanded == rdf + "parseType" || expanded == rdf + "li";
    }

    static bool xmlish_attr(const std::string& raw) {
        return raw == "xmlns" || raw.rfind("xmlns:", 0) == 0 || raw.rfind("xml:", 0) == 0;
    }

    std::string blank_for_label(const std::string& label) {
        auto it = blank_labels_.find(label);
        if (it != blank_labels_.end()) return it->second;
        std::string fresh = "_:b" + std::to_string(next_blank_++);
        blank_labels_.emplace(label, fresh);
        return fresh;
    }

    std::string fresh_blank() { return "_:b" + std::to_string(next_blank_++); }

    std::optional<std::string> find_attr(const XmlNode& node, const Scope& scope,
                                         const std::string& expanded_name) const {
        for (const XmlAttr& a : node.attrs) {
            if (xmlish_attr(a.name)) continue;
            if (expand_name(a.name, scope, false) == expanded_name) return a.value;
        }
        return std::nullopt;
    }

    // Returns the subject term of the node element after emitting its triples.
    RdfTerm parse_node_element(const XmlNode& node, const Scope& parent_scope) {
        Scope scope = enter(node, parent_scope);
        const std::string rdf(kRdfNs);

        RdfTerm subject = RdfTerm::blank("");
        if (auto about = find_attr(node, scope, rdf + "about")) {
            std::string iri = resolve_iri(*about, scope.base);
            if (!is_absolute_iri(iri))
                fail(node, "rdf:about='" + *about + "' is relative and no base is in scope");
            subject = RdfTerm::iri(iri);
        } else if (auto id = find_attr(node, scope, rdf + "ID")) {
            if (scope.base.empty()) fail(node, "rdf:ID requires a base IRI");
            subject = RdfTerm::iri(resolve_iri("#" + *id, scope.base));
        } else if (auto node_id = find_attr(node, scope, rdf + "nodeID")) {
            subject = RdfTerm::blank(blank_for_label(*node_id));
        } else {
            subject = RdfTerm::blank(fresh_blank());
        }

        std::string type_iri = expand_name(node.name, scope, true);
        if (type_iri != rdf + "Description")
            triples_.push_back({subject, std::string(kRdfType), RdfTerm::iri(type_iri)});

        // Property attributes on the node element.
        for (const XmlAttr& a : node.attrs) {
            if (xmlish_attr(a.name)) continue;
            std::string expanded = expand_name(a.name, scope, false);
            if (syntax_attr(expanded)) continue;
            if (expanded == rdf + "type") {
                triples_.push_back({subject, std::string(kRdfType),
                                    RdfTerm::iri(resolve_iri(a.value, scope.base))});
            } else if (is_absolute_iri(expanded)) {
                triples_.push_back({subject, expanded,
                                    RdfTerm::literal(a.value, scope.lang.empty()
                                                                  ? std::nullopt
                                                                  : std::optional(scope.lang))});
            }
        }

        unsigned li_counter = 0;
        for (const XmlNode& child : node.children)
            parse_property_element(child, scope, subject, li_counter);
        return subject;
    }

    void parse_property_element(const XmlNode& node, const Scope& parent_scope,
                                const RdfTerm& subject, unsigned& li_counter) {
        Scope scope = enter(node, parent_scope);
        const std::string rdf(kRdfNs);

        std::string predicate = expand_name(node.name, scope, true);
        if (predicate == rdf + "li") predicate = rdf + "_" + std::to_string(++li_counter);
        if (!is_absolute_iri(predicate))
            fail(node, "property element '" + node.name + "' does not expand to an absolute IRI");

        auto parse_type = find_attr(node, scope, rdf + "parseType");
        if (parse_type) {
            if (*parse_type == "Resource") {
                RdfTerm object = RdfTerm::blank(fresh_blank());
                triples_.push_back({subject, predicate, object});
                unsigned inner_li = 0;
                for (const XmlNode& child : node.children)
                    parse_property_element(child, scope, object, inner_li);
                return;
            }
            if (*parse_type == "Collection") {
                std::vector<RdfTerm> items;
                for (const XmlNode& child : node.children)
                    items.push_back(parse_node_element(child, scope));
                RdfTerm head = items.empty() ? RdfTerm::iri(std::string(kRdfNs) + "nil")
                                             : RdfTerm::blank(fresh_blank());
                triples_.push_back({subject, predicate, head});
                RdfTerm current = head;
                for (std::size_t i = 0; i < items.size(); ++i) {
                    triples_.push_back({current, rdf + "first", items[i]});
                    RdfTerm rest = i + 1 < items.size() ? RdfTerm::blank(fresh_blank())
                                                        : RdfTerm::iri(rdf + "nil");
                    triples_.push_back({current, rdf + "rest", rest});
                    current = rest;
                }
                return;
            }
            // parseType="Literal": keep the raw character data of the subtree.
            triples_.push_back({subject, predicate, RdfTerm::literal(collect_text(node))});
            return;
        }

        if (auto resource = find_attr(node, scope, rdf + "resource")) {
            std::string iri = resolve_iri(*resource, scope.base);
            if (!is_absolute_iri(iri))
                fail(node, "rdf:resource='" + *resource + "' is relative and no base is in scope");
            RdfTerm object = RdfTerm::iri(iri);
            triples_.push_back({subject, predicate, object});
            emit_property_attributes(node, scope, object);
            return;
        }
        if (auto node_id = find_attr(node, scope, rdf + "nodeID")) {
            RdfTerm object = RdfTerm::blank(blank_for_label(*node_id));
            triples_.push_back({subject, predicate, object});
            emit_property_attributes(node, scope, object);
            return;
        }

        if (!node.children.empty()) {
            if (!is_ws(node.text)) fail(node, "mixed element and text content");
            if (node.children.size() != 1)
                fail(node, "property element with more than one node element child");
            RdfTerm object = parse_node_element(node.children.front(), scope);
            triples_.push_back({subject, predicate, object});
            return;
        }

        if (auto datatype = find_attr(node, scope, rdf + "datatype")) {
            triples_.push_back({subject, predicate,
                                RdfTerm::literal(node.text, {}, resolve_iri(*datatype, scope.base))});
            return;
        }

        if (has_property_attributes(node, scope)) {
            // Property attributes with no resource: object is a fresh blank node.
            RdfTerm object = RdfTerm::blank(fresh_blank());
            triples_.push_back({subject, predicate, object});
            emit_property_attributes(node, scope, object);
            return;
        }

        triples_.push_back({subject, predicate,
                            RdfTerm::literal(node.text, scope.lang.empty()
                                                            ? std::nullopt
                                                            : std::optional(scope.lang))});
    }

    bool has_property_attributes(const XmlNode& node, const Scope& scope) const {
        for (const XmlAttr& a : node.attrs) {
            if (xmlish_attr(a.name)) continue;
            std::string expanded = expand_name(a.name, scope, false);
            if (!syntax_attr(expanded) && expanded != std::string(kRdfNs) + "ID" &&
                is_absolute_iri(expanded))
                return true;
        }
        return false;
    }

    void emit_property_attributes(const XmlNode& node, const Scope& scope, const RdfTerm& object) {
        for (const XmlAttr& a : node.attrs) {
            if (xmlish_attr(a.name)) continue;
            std::string expanded = expand_name(a.name, scope, false);
            if (syntax_attr(expanded) || !is_absolute_iri(expanded)) continue;
            triples_.push_back({object, expanded, RdfTerm::literal(a.value)});
        }
    }

    static std::string collect_text(const XmlNode& node) {
        std::string out = node.text;
        for (const XmlNode& child : node.children) out += collect_text(child);
        return out;
    }

    XmlReader reader_;
    Scope root_scope_;
    std::map<std::string, std::string> blank_labels_;
    unsigned next_blank_ = 0;
    std::vector<Triple> triples_;
};

}  // namespace

std::vector<Triple> parse_rdf_xml(std::string_view content, std::string_view base_iri) {
    return RdfXmlParser(content, base_iri).run();
}

}  // namespace dcatq::rdf
