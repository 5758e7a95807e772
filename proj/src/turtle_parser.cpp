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

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dcatq/errors.hpp"
#include "dcatq/rdf.hpp"

namespace dcatq::rdf {
namespace {

const std::string kRdfFirst = std::string(kRdfNs) + "first";
const std::string kRdfRest = std::string(kRdfNs) + "rest";
const std::string kRdfNil = std::string(kRdfNs) + "nil";
const std::string kXsdInteger = std::string(kXsdNs) + "integer";
const std::string kXsdDecimal = std::string(kXsdNs) + "decimal";
const std::string kXsdDouble = std::string(kXsdNs) + "double";
const std::string kXsdBoolean = std::string(kXsdNs) + "boolean";

std::string encode_utf8(unsigned code) {
    std::string out;
    if (code < 0x80) {
        out += static_cast<char>(code);
    } else if (code < 0x800) {
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
    return out;
}

class Lexer {
public:
    enum class Token {
        eof, dot, semicolon, comma, lbracket, rbracket, lparen, rparen,
        at, caret_caret, colon, iri_ref, string_lit, integer, decimal,
        double_lit, boolean_lit, name, a_keyword
    };

    explicit Lexer(std::string_view input) : input_(input) {}

    Token next() {
        if (has_putback_) {
            has_putback_ = false;
            return putback_;
        }
        value_.clear();
        while (pos_ < input_.size()) {
            char c = input_[pos_];
            switch (c) {
                case ' ': case '\t': case '\r': ++pos_; continue;
                case '\n': ++pos_; ++line_; continue;
                case '#':
                    while (pos_ < input_.size() && input_[pos_] != '\n') ++pos_;
                    continue;
                case '.':
                    if (pos_ + 1 < input_.size() && std::isdigit(uc(input_[pos_ + 1])))
                        return lex_number();
                    ++pos_; return Token::dot;
                case ';': ++pos_; return Token::semicolon;
                case ',': ++pos_; return Token::comma;
                case '[': ++pos_; return Token::lbracket;
                case ']': ++pos_; return Token::rbracket;
                case '(': ++pos_; return Token::lparen;
                case ')': ++pos_; return Token::rparen;
                case '@': ++pos_; return Token::at;
                case ':': ++pos_; return Token::colon;
                case '^':
                    if (pos_ + 1 >= input_.size() || input_[pos_ + 1] != '^')
                        fail("'^^' expected");
                    pos_ += 2; return Token::caret_caret;
                case '<': return lex_iri();
                case '"': case '\'': return lex_string(c);
                case '+': case '-': return lex_number();
                default:
                    if (std::isdigit(uc(c))) return lex_number();
                    return lex_name();
            }
        }
        return Token::eof;
    }

    void unget(Token t) { putback_ = t; has_putback_ = true; }

    const std::string& value() const { return value_; }
    unsigned line() const { return line_; }

    [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(line_, message); }

private:
    static unsigned char uc(char c) { return static_cast<unsigned char>(c); }

    static bool name_char(char c) {
        return std::isalnum(uc(c)) || c == '_' || c == '-' || uc(c) >= 0x80 || c == '%';
    }

    Token lex_iri() {
        ++pos_;  // consume '<'
        while (pos_ < input_.size()) {
            char c = input_[pos_];
            if (c == '>') { ++pos_; return Token::iri_ref; }
            if (c == '\\') { ++pos_; lex_escape(); continue; }
            if (c == ' ' || c == '\n') fail("whitespace inside IRI");
            value_ += c;
            ++pos_;
        }
        fail("unterminated IRI");
    }

    void lex_escape() {
        if (pos_ >= input_.size()) fail("dangling escape");
        char c = input_[pos_++];
        switch (c) {
            case 't': value_ += '\t'; return;
            case 'b': value_ += '\b'; return;
            case 'n': value_ += '\n'; return;
            case 'r': value_ += '\r'; return;
            case 'f': value_ += '\f'; return;
            case '"': value_ += '"'; return;
            case '\'': value_ += '\''; return;
            case '\\': value_ += '\\'; return;
            case 'u': value_ += encode_utf8(lex_hex(4)); return;
            case 'U': value_ += encode_utf8(lex_hex(8)); return;
            default: fail(std::string("invalid escape '\\") + c + "'");
        }
    }

    unsigned lex_hex(unsigned len) {
        unsigned result = 0;
        for (unsigned i = 0; i < len; ++i) {
            if (pos_ >= input_.size()) fail("truncated unicode escape");
            char c = input_[pos_++];
            result <<= 4;
            if (c >= '0' && c <= '9') result |= static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') result |= static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') result |= static_cast<unsigned>(c - 'A' + 10);
            else fail("invalid unicode escape");
        }
        return result;
    }

    Token lex_string(char quote) {
        ++pos_;  // opening quote
        bool long_form = false;
        if (pos_ + 1 < input_.size() && input_[pos_] == quote && input_[pos_ + 1] == quote) {
            long_form = true;
            pos_ += 2;
        } else if (pos_ < input_.size() && input_[pos_] == quote) {
            ++pos_;  // empty short string
            return Token::string_lit;
        }
        while (pos_ < input_.size()) {
            char c = input_[pos_];
            if (c == quote) {
                if (!long_form) { ++pos_; return Token::string_lit; }
                if (input_.substr(pos_).starts_with(std::string(3, quote))) {
                    pos_ += 3;
                    return Token::string_lit;
                }
                value_ += c;
                ++pos_;
                continue;
            }
            if (c == '\\') { ++pos_; lex_escape(); continue; }
            if (c == '\n') {
                if (!long_form) fail("newline in string literal");
                ++line_;
            }
            value_ += c;
            ++pos_;
        }
        fail("unterminated string literal");
    }

    Token lex_number() {
        bool seen_dot = false, seen_exp = false;
        if (input_[pos_] == '+' || input_[pos_] == '-') value_ += input_[pos_++];
        while (pos_ < input_.size()) {
            char c = input_[pos_];
            if (std::isdigit(uc(c))) {
                value_ += c; ++pos_;
            } else if (c == '.' && !seen_dot && !seen_exp &&
                       pos_ + 1 < input_.size() && std::isdigit(uc(input_[pos_ + 1]))) {
                seen_dot = true; value_ += c; ++pos_;
            } else if ((c == 'e' || c == 'E') && !seen_exp) {
                seen_exp = true; value_ += c; ++pos_;
                if (pos_ < input_.size() && (input_[pos_] == '+' || input_[pos_] == '-'))
                    value_ += input_[pos_++];
            } else {
                break;
            }
        }
        if (value_.empty() || !std::isdigit(uc(value_.back()))) fail("malformed number");
        if (seen_exp) return Token::double_lit;
        return seen_dot ? Token::decimal : Token::integer;
    }

    Token lex_name() {
        char c = input_[pos_];
        if (!name_char(c)) fail(std::string("unexpected character '") + c + "'");
        while (pos_ < input_.size()) {
            c = input_[pos_];
            if (name_char(c)) {
                value_ += c; ++pos_;
            } else if (c == '.' && pos_ + 1 < input_.size() && name_char(input_[pos_ + 1])) {
                // Interior dot of a local name; a statement dot is followed by
                // whitespace or EOF.
                value_ += c; ++pos_;
            } else {
                break;
            }
        }
        if (value_ == "a") return Token::a_keyword;
        if (value_ == "true" || value_ == "false") return Token::boolean_lit;
        return Token::name;
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    unsigned line_ = 1;
    std::string value_;
    Token putback_ = Token::eof;
    bool has_putback_ = false;
};

class TurtleParser {
public:
    TurtleParser(std::string_view input, std::string_view base) : lexer_(input), base_(base) {}

    std::vector<Triple> run() {
        for (;;) {
            Lexer::Token t = lexer_.next();
            if (t == Lexer::Token::eof) break;
            if (t == Lexer::Token::at) {
                parse_at_directive();
                continue;
            }
            if (t == Lexer::Token::name &&
                (iequals(lexer_.value(), "PREFIX") || iequals(lexer_.value(), "BASE"))) {
                parse_sparql_directive(iequals(lexer_.value(), "BASE"));
                continue;
            }
            lexer_.unget(t);
            parse_triples();
            expect(Lexer::Token::dot, "'.' expected after statement");
        }
        return std::move(triples_);
    }

private:
    using Token = Lexer::Token;

    static bool iequals(const std::string& s, std::string_view ref) {
        if (s.size() != ref.size()) return false;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (std::toupper(static_cast<unsigned char>(s[i])) != ref[i]) return false;
        return true;
    }

    void expect(Token want, const char* message) {
        if (lexer_.next() != want) lexer_.fail(message);
    }

    std::string resolve(const std::string& ref) {
        if (is_absolute_iri(ref)) return ref;
        std::string out = resolve_iri(ref, base_);
        if (!is_absolute_iri(out))
            lexer_.fail("relative IRI <" + ref + "> with no usable base");
        return out;
    }

    void parse_at_directive() {
        expect(Token::name, "directive name expected after '@'");
        if (lexer_.value() == "base") {
            expect(Token::iri_ref, "IRI expected after @base");
            base_ = resolve(lexer_.value());
            expect(Token::dot, "'.' expected after @base");
        } else if (lexer_.value() == "prefix") {
            parse_prefix_binding();
            expect(Token::dot, "'.' expected after @prefix");
        } else {
            lexer_.fail("unknown directive @" + lexer_.value());
        }
    }

    void parse_sparql_directive(bool is_base) {
        if (is_base) {
            expect(Token::iri_ref, "IRI expected after BASE");
            base_ = resolve(lexer_.value());
        } else {
            parse_prefix_binding();
        }
    }

    void parse_prefix_binding() {
        Token t = lexer_.next();
        std::string prefix;
        if (t == Token::name) {
            prefix = lexer_.value();
            t = lexer_.next();
        }
        if (t != Token::colon) lexer_.fail("':' expected in prefix declaration");
        expect(Token::iri_ref, "IRI expected in prefix declaration");
        prefixes_[prefix] = resolve(lexer_.value());
    }

    std::string expand_prefixed(const std::string& prefix) {
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) lexer_.fail("unknown prefix '" + prefix + ":'");
        Token t = lexer_.next();
        if (t == Token::name || t == Token::boolean_lit || t == Token::a_keyword ||
            t == Token::integer) {
            return it->second + lexer_.value();
        }
        lexer_.unget(t);
        return it->second;
    }

    std::string blank_for_label(const std::string& label) {
        auto it = blank_labels_.find(label);
        if (it != blank_labels_.end()) return it->second;
        std::string fresh = "_:b" + std::to_string(next_blank_++);
        blank_labels_.emplace(label, fresh);
        return fresh;
    }

    std::string fresh_blank() { return "_:b" + std::to_string(next_blank_++); }

    RdfTerm parse_blank_or_collection(Token t) {
        if (t == Token::lbracket) {
            std::string node = fresh_blank();
            Token peek = lexer_.next();
            if (peek != Token::rbracket) {
                lexer_.unget(peek);
                parse_predicate_object_list(RdfTerm::blank(node));
                expect(Token::rbracket, "']' expected");
            }
            return RdfTerm::blank(node);
        }
        // Collection. Empty collections are rdf:nil.
        std::vector<RdfTerm> items;
        for (;;) {
            Token peek = lexer_.next();
            if (peek == Token::rparen) break;
            lexer_.unget(peek);
            items.push_back(parse_object());
        }
        if (items.empty()) return RdfTerm::iri(kRdfNil);
        std::vector<std::string> nodes;
        nodes.reserve(items.size());
        for (std::size_t i = 0; i < items.size(); ++i) nodes.push_back(fresh_blank());
        for (std::size_t i = 0; i < items.size(); ++i) {
            triples_.push_back({RdfTerm::blank(nodes[i]), kRdfFirst, items[i]});
            RdfTerm rest = i + 1 < items.size() ? RdfTerm::blank(nodes[i + 1]) : RdfTerm::iri(kRdfNil);
            triples_.push_back({RdfTerm::blank(nodes[i]), kRdfRest, rest});
        }
        return RdfTerm::blank(nodes.front());
    }

    RdfTerm parse_node(Token t) {
        switch (t) {
            case Token::iri_ref:
                return RdfTerm::iri(resolve(lexer_.value()));
            case Token::colon:
                lexer_.unget(t);
                lexer_.next();
                return RdfTerm::iri(expand_prefixed(""));
            case Token::name: {
                std::string first = lexer_.value();
                if (first == "_") {
                    expect(Token::colon, "':' expected after '_'");
                    expect(Token::name, "blank node label expected");
                    return RdfTerm::blank(blank_for_label(lexer_.value()));
                }
                expect(Token::colon, "':' expected in prefixed name");
                return RdfTerm::iri(expand_prefixed(first));
            }
            case Token::lbracket:
            case Token::lparen:
                return parse_blank_or_collection(t);
            default:
                lexer_.fail("IRI, prefixed name, or blank node expected");
        }
    }

    RdfTerm parse_object() {
        Token t = lexer_.next();
        switch (t) {
            case Token::integer:
                return RdfTerm::literal(lexer_.value(), {}, kXsdInteger);
            case Token::decimal:
                return RdfTerm::literal(lexer_.value(), {}, kXsdDecimal);
            case Token::double_lit:
                return RdfTerm::literal(lexer_.value(), {}, kXsdDouble);
            case Token::boolean_lit:
                return RdfTerm::literal(lexer_.value(), {}, kXsdBoolean);
            case Token::string_lit: {
                std::string value = lexer_.value();
                Token peek = lexer_.next();
                if (peek == Token::at) {
                    expect(Token::name, "language tag expected after '@'");
                    return RdfTerm::literal(std::move(value), lexer_.value());
                }
                if (peek == Token::caret_caret) {
                    Token dt = lexer_.next();
                    std::string datatype;
                    if (dt == Token::iri_ref) {
                        datatype = resolve(lexer_.value());
                    } else if (dt == Token::name) {
                        std::string prefix = lexer_.value();
                        expect(Token::colon, "':' expected in prefixed name");
                        datatype = expand_prefixed(prefix);
                    } else if (dt == Token::colon) {
                        datatype = expand_prefixed("");
                    } else {
                        lexer_.fail("datatype IRI expected after '^^'");
                    }
                    return RdfTerm::literal(std::move(value), {}, std::move(datatype));
                }
                lexer_.unget(peek);
                return RdfTerm::literal(std::move(value));
            }
            default:
                return parse_node(t);
        }
    }

    std::string parse_verb() {
        Token t = lexer_.next();
        if (t == Token::a_keyword) return std::string(kRdfType);
        if (t == Token::iri_ref) return resolve(lexer_.value());
        if (t == Token::colon) {
            lexer_.unget(t);
            lexer_.next();
            return expand_prefixed("");
        }
        if (t == Token::name) {
            std::string prefix = lexer_.value();
            if (prefix == "_") lexer_.fail("blank node not allowed as predicate");
            expect(Token::colon, "':' expected in prefixed name");
            return expand_prefixed(prefix);
        }
        lexer_.fail("predicate expected");
    }

    void parse_predicate_object_list(const RdfTerm& subject) {
        for (;;) {
            std::string predicate = parse_verb();
            for (;;) {
                RdfTerm object = parse_object();
                triples_.push_back({subject, predicate, std::move(object)});
                Token t = lexer_.next();
                if (t != Token::comma) { lexer_.unget(t); break; }
            }
            Token t = lexer_.next();
            if (t != Token::semicolon) { lexer_.unget(t); return; }
            // A trailing ';' before '.' is legal.
            Token peek = lexer_.next();
            lexer_.unget(peek);
            if (peek == Token::dot || peek == Token::rbracket) return;
        }
    }

    void parse_triples() {
        Token t = lexer_.next();
        RdfTerm subject = parse_node(t);
        if (t == Token::lbracket) {
            // [ ... ] used as subject may omit the predicate-object list.
            Token peek = lexer_.next();
            lexer_.unget(peek);
            if (peek == Token::dot) return;
        }
        parse_predicate_object_list(subject);
    }

    Lexer lexer_;
    std::string base_;
    std::map<std::string, std::string> prefixes_;
    std::map<std::string, std::string> blank_labels_;
    unsigned next_blank_ = 0;
    std::vector<Triple> triples_;
};

}  // namespace

std::vector<Triple> parse_turtle(std::string_view content, std::string_view base_iri) {
    return TurtleParser(content, base_iri).run();
}

}  // namespace dcatq::rdf
