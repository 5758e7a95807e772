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

#include "dcatq/vocab.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "dcatq/errors.hpp"

namespace dcatq::vocab {

namespace detail {
// Defined in the configure-time generated predicate_map_data.cpp.
extern const char* kBuiltinPredicateMap;
}  // namespace detail

namespace {

constexpr std::array<std::string_view, 22> kNames = {
    "title", "description", "identifier", "publisher", "creator", "issued",
    "modified", "language", "license", "rights", "keyword", "theme",
    "distribution", "access_url", "download_url", "media_type", "format",
    "provenance", "derived_from", "source", "landing_page", "other"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view to_string(Name name) { return kNames[static_cast<std::size_t>(name)]; }

std::optional<Name> name_from_string(std::string_view text) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == text) return static_cast<Name>(i);
    return std::nullopt;
}

PredicateMap PredicateMap::parse(std::string_view text) {
    PredicateMap map;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw ConfigSchemaError("predicate_map:" + std::to_string(line_no),
                                    "expected '<IRI>\\t<name>'");
        std::string_view iri = trim(line.substr(0, tab));
        std::string_view name_text = trim(line.substr(tab + 1));
        auto name = name_from_string(name_text);
        if (!name)
            throw ConfigSchemaError("predicate_map:" + std::to_string(line_no),
                                    "unknown canonical name '" + std::string(name_text) + "'");
        map.entries_.insert_or_assign(std::string(iri), *name);
    }
    return map;
}

PredicateMap PredicateMap::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open predicate map '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const PredicateMap& PredicateMap::builtin() {
    static const PredicateMap map = parse(detail::kBuiltinPredicateMap);
    return map;
}

CanonicalProperty PredicateMap::normalize(std::string_view predicate) const {
    CanonicalProperty out;
    out.raw_predicate = std::string(predicate);
    auto it = entries_.find(predicate);
    out.name = it == entries_.end() ? Name::other : it->second;
    return out;
}

CanonicalProperty normalize_predicate(std::string_view predicate) {
    return PredicateMap::builtin().normalize(predicate);
}

}  // namespace dcatq::vocab
