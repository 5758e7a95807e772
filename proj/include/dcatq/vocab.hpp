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

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace dcatq::vocab {

/// Canonical property vocabulary DCAT and Dublin Core predicates are folded
/// into. Unmapped predicates become `other` (raw IRI preserved).
enum class Name {
    title, description, identifier, publisher, creator, issued, modified,
    language, license, rights, keyword, theme, distribution, access_url,
    download_url, media_type, format, provenance, derived_from, source,
    landing_page, other
};

std::string_view to_string(Name name);
std::optional<Name> name_from_string(std::string_view text);

/// A predicate after normalization: the canonical name plus the original IRI.
struct CanonicalProperty {
    Name name = Name::other;
    std::string raw_predicate;

    bool operator==(const CanonicalProperty&) const = default;
};

/// Predicate IRI -> canonical name table. The builtin table is compiled in
/// from data/predicate_map.tsv; the same file format can be loaded at runtime
/// to extend or replace it without a rebuild.
class PredicateMap {
public:
    /// The bundled DCAT 2 + Dublin Core table.
    static const PredicateMap& builtin();

    /// Parse table text ("IRI<TAB>name" lines, '#' comments). Throws
    /// ConfigSchemaError on unknown canonical names or malformed lines.
    static PredicateMap parse(std::string_view text);

    /// Read a table file. Throws IoError if unreadable.
    static PredicateMap load(const std::string& path);

    /// Total function: unknown predicates map to `other` with the raw IRI kept.
    CanonicalProperty normalize(std::string_view predicate) const;

    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, Name, std::less<>> entries_;
};

/// Normalize against the builtin table.
CanonicalProperty normalize_predicate(std::string_view predicate);

}  // namespace dcatq::vocab
