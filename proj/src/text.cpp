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

#include "dcatq/text.hpp"

#include <array>
#include <cstdint>
#include <set>

namespace dcatq::text {
namespace {

/// Decodes one UTF-8 code point at `pos`, advancing `pos`. Invalid bytes
/// decode as U+FFFD and advance by one.
char32_t next_code_point(std::string_view s, std::size_t& pos) {
    const auto byte = [&](std::size_t i) -> std::uint8_t {
        return static_cast<std::uint8_t>(s[i]);
    };
    std::uint8_t b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    auto cont = [&](std::size_t i) { return i < s.size() && (byte(i) & 0xC0) == 0x80; };
    if ((b0 & 0xE0) == 0xC0 && cont(pos + 1)) {
        char32_t cp = (char32_t(b0 & 0x1F) << 6) | (byte(pos + 1) & 0x3F);
        pos += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(pos + 1) && cont(pos + 2)) {
        char32_t cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(byte(pos + 1) & 0x3F) << 6) |
                      (byte(pos + 2) & 0x3F);
        pos += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
        char32_t cp = (char32_t(b0 & 0x07) << 18) | (char32_t(byte(pos + 1) & 0x3F) << 12) |
                      (char32_t(byte(pos + 2) & 0x3F) << 6) | (byte(pos + 3) & 0x3F);
        pos += 4;
        return cp;
    }
    ++pos;
    return 0xFFFD;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

/// Lowercase folding over ASCII, Latin-1 Supplement, and the paired
/// upper/lower forms of Latin Extended-A. Other code points pass through.
char32_t fold(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 32;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
    if (cp >= 0x100 && cp <= 0x177 && (cp % 2) == 0) return cp + 1;
    if (cp >= 0x179 && cp <= 0x17D && (cp % 2) == 1) return cp + 1;
    return cp;
}

bool is_word_cp(char32_t cp) {
    if (cp >= U'0' && cp <= U'9') return true;
    if (cp >= U'a' && cp <= U'z') return true;
    if (cp >= U'A' && cp <= U'Z') return true;
    if (cp >= 0xC0 && cp <= 0x17F && cp != 0xD7 && cp != 0xF7) return true;
    return false;
}

struct Stopwords {
    std::string_view lang;
    std::set<std::string_view> words;
};

const std::array<Stopwords, 5>& stopword_table() {
    static const std::array<Stopwords, 5> table = {{
        {"en",
         {"the", "and", "of", "to", "in", "is", "for", "with", "that", "are",
          "this", "from", "was", "has", "have", "not", "which", "about"}},
        {"de",
         {"der", "die", "das", "und", "von", "mit", "für", "ist", "nicht",
          "ein", "eine", "den", "dem", "des", "auf", "im", "über", "werden"}},
        {"fr",
         {"le", "la", "les", "de", "des", "et", "un", "une", "du", "dans",
          "est", "pour", "que", "qui", "sur", "avec", "pas", "sont"}},
        {"es",
         {"el", "la", "los", "las", "de", "del", "y", "en", "que", "un",
          "una", "es", "por", "con", "para", "se", "no", "datos"}},
        {"it",
         {"il", "lo", "la", "gli", "le", "di", "e", "che", "un", "una",
          "per", "con", "del", "della", "sono", "dei", "non", "dati"}},
    }};
    return table;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view input) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t pos = 0;
    while (pos < input.size()) {
        char32_t cp = next_code_point(input, pos);
        if (is_word_cp(cp)) {
            append_utf8(current, fold(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::string normalize_label(std::string_view input) {
    std::string out;
    out.reserve(input.size());
    bool pending_space = false;
    std::size_t pos = 0;
    while (pos < input.size()) {
        char32_t cp = next_code_point(input, pos);
        bool ws = cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
                  cp == U'\f' || cp == U'\v' || cp == 0xA0;
        if (ws) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        append_utf8(out, fold(cp));
    }
    return out;
}

std::optional<std::string> detect_language(std::string_view input) {
    auto tokens = tokenize(input);
    if (tokens.size() < 5) return std::nullopt;

    std::string best_lang;
    int best = 0;
    int second = 0;
    for (const auto& entry : stopword_table()) {
        int hits = 0;
        for (const auto& tok : tokens) {
            if (entry.words.count(tok) != 0) ++hits;
        }
        if (hits > best) {
            second = best;
            best = hits;
            best_lang = std::string(entry.lang);
        } else if (hits > second) {
            second = hits;
        }
    }
    if (best < 3 || best - second < 2) return std::nullopt;
    return best_lang;
}

}  // namespace dcatq::text
