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

#include "dcatq/rdf.hpp"

#include <algorithm>
#include <cctype>

#include "dcatq/errors.hpp"

namespace dcatq::rdf {

RdfTerm RdfTerm::iri(std::string value) {
    RdfTerm t;
    t.kind = TermKind::iri;
    t.lexical = std::move(value);
    return t;
}

RdfTerm RdfTerm::blank(std::string label) {
    RdfTerm t;
    t.kind = TermKind::blank_node;
    t.lexical = std::move(label);
    return t;
}

RdfTerm RdfTerm::literal(std::string value, std::optional<std::string> language,
                         std::optional<std::string> datatype) {
    RdfTerm t;
    t.kind = TermKind::literal;
    t.lexical = std::move(value);
    t.language_tag = std::move(language);
    t.datatype = std::move(datatype);
    return t;
}

bool is_absolute_iri(std::string_view value) {
    if (value.empty() || !std::isalpha(static_cast<unsigned char>(value[0]))) return false;
    for (std::size_t i = 1; i < value.size(); ++i) {
        char c = value[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

namespace {

// Remove "./" and "../" segments per RFC 3986 section 5.2.4.
std::string remove_dot_segments(std::string_view path) {
    std::string input(path);
    std::string output;
    while (!input.empty()) {
        if (input.rfind("../", 0) == 0) {
            input.erase(0, 3);
        } else if (input.rfind("./", 0) == 0) {
            input.erase(0, 2);
        } else if (input.rfind("/./", 0) == 0) {
            input.replace(0, 3, "/");
        } else if (input == "/.") {
            input = "/";
        } else if (input.rfind("/../", 0) == 0 || input == "/..") {
            input.replace(0, input == "/.." ? 3 : 4, "/");
            auto slash = output.find_last_of('/');
            output.erase(slash == std::string::npos ? 0 : slash);
        } else if (input == "." || input == "..") {
            input.clear();
        } else {
            std::size_t next = input.find('/', 1);
            output += input.substr(0, next);
            input.erase(0, next == std::string::npos ? input.size() : next);
        }
    }
    return output;
}

struct IriParts {
    std::string scheme, authority, path, query, fragment;
    bool has_authority = false, has_query = false, has_fragment = false;
};

IriParts split_iri(std::string_view iri) {
    IriParts p;
    auto frag = iri.find('#');
    if (frag != std::string_view::npos) {
        p.has_fragment = true;
        p.fragment = std::string(iri.substr(frag + 1));
        iri = iri.substr(0, frag);
    }
    auto query = iri.find('?');
    if (query != std::string_view::npos) {
        p.has_query = true;
        p.query = std::string(iri.substr(query + 1));
        iri = iri.substr(0, query);
    }
    if (is_absolute_iri(iri)) {
        auto colon = iri.find(':');
        p.scheme = std::string(iri.substr(0, colon));
        iri = iri.substr(colon + 1);
    }
    if (iri.rfind("//", 0) == 0) {
        p.has_authority = true;
        auto end = iri.find('/', 2);
        p.authority = std::string(iri.substr(2, end == std::string_view::npos ? iri.size() - 2 : end - 2));
        iri = end == std::string_view::npos ? std::string_view{} : iri.substr(end);
    }
    p.path = std::string(iri);
    return p;
}

std::string join_iri(const IriParts& p) {
    std::string out;
    if (!p.scheme.empty()) out += p.scheme + ":";
    if (p.has_authority) out += "//" + p.authority;
    out += p.path;
    if (p.has_query) out += "?" + p.query;
    if (p.has_fragment) out += "#" + p.fragment;
    return out;
}

}  // namespace

std::string resolve_iri(std::string_view reference, std::string_view base) {
    if (is_absolute_iri(reference) || base.empty()) return std::string(reference);

    IriParts r = split_iri(reference);
    IriParts b = split_iri(base);
    IriParts t;
    t.scheme = b.scheme;
    if (r.has_authority) {
        t.has_authority = true;
        t.authority = r.authority;
        t.path = remove_dot_segments(r.path);
        t.has_query = r.has_query;
        t.query = r.query;
    } else {
        t.has_authority = b.has_authority;
        t.authority = b.authority;
        if (r.path.empty()) {
            t.path = b.path;
            t.has_query = r.has_query ? true : b.has_query;
            t.query = r.has_query ? r.query : b.query;
        } else {
            if (r.path[0] == '/') {
                t.path = remove_dot_segments(r.path);
            } else {
                auto slash = b.path.find_last_of('/');
                std::string merged =
                    slash == std::string::npos ? r.path : b.path.substr(0, slash + 1) + r.path;
                if (b.path.empty() && b.has_authority) merged = "/" + r.path;
                t.path = remove_dot_segments(merged);
            }
            t.has_query = r.has_query;
            t.query = r.query;
        }
    }
    t.has_fragment = r.has_fragment;
    t.fragment = r.fragment;
    return join_iri(t);
}

void require_utf8(std::string_view bytes) {
    std::size_t i = 0;
    while (i < bytes.size()) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        if (c < 0x80) {
            len = 1;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            if (c < 0xC2) throw EncodingError("overlong sequence at byte " + std::to_string(i));
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            if (c > 0xF4) throw EncodingError("code point out of range at byte " + std::to_string(i));
        } else {
            throw EncodingError("invalid UTF-8 lead byte at " + std::to_string(i));
        }
        if (i + len > bytes.size())
            throw EncodingError("truncated UTF-8 sequence at byte " + std::to_string(i));
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(bytes[i + k]) & 0xC0) != 0x80)
                throw EncodingError("invalid UTF-8 continuation at byte " + std::to_string(i + k));
        }
        i += len;
    }
}

TripleSet::TripleSet(std::vector<Triple> triples, RdfFormat source_format)
    : triples_(std::move(triples)), source_format_(source_format) {
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

TripleSet parse_rdf(std::string_view content, RdfFormat format, std::string_view base_iri) {
    require_utf8(content);
    std::vector<Triple> triples = format == RdfFormat::turtle
                                      ? parse_turtle(content, base_iri)
                                      : parse_rdf_xml(content, base_iri);
    return TripleSet(std::move(triples), format);
}

}  // namespace dcatq::rdf
