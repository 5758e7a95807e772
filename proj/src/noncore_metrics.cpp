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

#include "dcatq/noncore_metrics.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "dcatq/errors.hpp"
#include "dcatq/rdf.hpp"

namespace dcatq::metrics {
namespace {

using catalog::CatalogModel;
using catalog::Entity;
using catalog::EntityKind;

const std::string kWasGeneratedBy = std::string(rdf::kProvNs) + "wasGeneratedBy";

bool is_blank(std::string_view text) {
    return std::all_of(text.begin(), text.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
}

bool has_value(const Entity& entity, vocab::Name name) {
    for (const auto& attr : entity.attributes) {
        if (attr.property.name == name && !is_blank(attr.value.lexical)) {
            return true;
        }
    }
    return false;
}

/// prov:wasGeneratedBy is outside the canonical vocabulary, so it survives
/// as an `other` attribute (or relationship) with the raw IRI intact.
bool has_generation(const Entity& entity, bool textual_only) {
    for (const auto& attr : entity.attributes) {
        if (attr.property.raw_predicate != kWasGeneratedBy || is_blank(attr.value.lexical)) {
            continue;
        }
        if (!textual_only || attr.value.kind == rdf::TermKind::literal) {
            return true;
        }
    }
    return false;
}

bool has_generation_link(const CatalogModel& model, const Entity& entity) {
    for (const auto& rel : model.relationships()) {
        if (rel.source == entity.id && rel.predicate.raw_predicate == kWasGeneratedBy) {
            return true;
        }
    }
    return false;
}

std::string dataset_text(const Entity& entity) {
    std::string out;
    for (vocab::Name name : {vocab::Name::title, vocab::Name::description}) {
        const rdf::RdfTerm* term = entity.value_of(name);
        if (term == nullptr || term->lexical.empty()) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += term->lexical;
    }
    return out;
}

bool token_is_word(std::string_view token) {
    for (char c : token) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u) != 0 || u >= 0x80) {
            return true;
        }
    }
    return false;
}

}  // namespace

ProvenanceIndicators provenance_indicators(const CatalogModel& model, const Entity& dataset) {
    ProvenanceIndicators out;
    out.lineage_statement = has_value(dataset, vocab::Name::provenance);
    out.ancestors =
        has_value(dataset, vocab::Name::derived_from) || has_value(dataset, vocab::Name::source);
    out.data_source = has_value(dataset, vocab::Name::source);
    out.generation_activity =
        has_generation(dataset, false) || has_generation_link(model, dataset);
    out.processing_steps = has_generation(dataset, true);
    for (const Entity& other : model.entities()) {
        if (other.id == dataset.id) {
            continue;
        }
        for (const auto& attr : other.attributes) {
            if (attr.property.name == vocab::Name::derived_from &&
                attr.value.lexical == dataset.id) {
                out.descendants = true;
            }
        }
    }
    return out;
}

double provenance_score(const CatalogModel& model) {
    double sum = 0.0;
    std::size_t datasets = 0;
    for (const Entity& entity : model.entities()) {
        if (entity.kind != EntityKind::dataset) {
            continue;
        }
        ++datasets;
        sum += provenance_indicators(model, entity).count() / 6.0;
    }
    if (datasets == 0) {
        throw EmptyCatalogError("no datasets to score provenance for");
    }
    return 100.0 * sum / static_cast<double>(datasets);
}

int count_syllables(std::string_view word) {
    std::string letters;
    for (char c : word) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalpha(u) != 0) {
            letters += static_cast<char>(std::tolower(u));
        }
    }
    if (letters.empty()) {
        return 1;
    }
    auto vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    int groups = 0;
    bool in_group = false;
    for (char c : letters) {
        if (vowel(c)) {
            if (!in_group) {
                ++groups;
            }
            in_group = true;
        } else {
            in_group = false;
        }
    }
    std::size_t n = letters.size();
    if (n >= 2 && letters[n - 1] == 'e') {
        bool consonant_le = n >= 3 && letters[n - 2] == 'l' && !vowel(letters[n - 3]);
        if (!consonant_le) {
            --groups;
        }
    }
    return std::max(groups, 1);
}

ReadabilityStats flesch_kincaid(std::string_view text) {
    ReadabilityStats stats;
    bool in_terminator = false;
    for (char c : text) {
        bool terminator = c == '.' || c == '!' || c == '?';
        if (terminator && !in_terminator) {
            ++stats.sentences;
        }
        in_terminator = terminator;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) {
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0) {
            ++i;
        }
        std::string_view token = text.substr(start, i - start);
        if (!token.empty() && token_is_word(token)) {
            ++stats.words;
            stats.syllables += static_cast<std::size_t>(count_syllables(token));
        }
    }
    if (stats.words == 0) {
        throw NoWordsError("text has no countable words");
    }
    if (stats.sentences == 0) {
        stats.sentences = 1;
    }
    stats.grade = 0.39 * (static_cast<double>(stats.words) / static_cast<double>(stats.sentences)) +
                  11.8 * (static_cast<double>(stats.syllables) / static_cast<double>(stats.words)) -
                  15.59;
    return stats;
}

double readability(const CatalogModel& model) {
    double sum = 0.0;
    std::size_t graded = 0;
    for (const Entity& entity : model.entities()) {
        if (entity.kind != EntityKind::dataset) {
            continue;
        }
        std::string text = dataset_text(entity);
        if (text.empty()) {
            continue;
        }
        try {
            sum += flesch_kincaid(text).grade;
            ++graded;
        } catch (const NoWordsError&) {
            // Punctuation-only text; the dataset has nothing to grade.
        }
    }
    if (graded == 0) {
        throw NoWordsError("no dataset has countable title or description text");
    }
    return sum / static_cast<double>(graded);
}

double licensing(const CatalogModel& model) {
    std::size_t datasets = 0;
    std::size_t licensed = 0;
    for (const Entity& entity : model.entities()) {
        if (entity.kind != EntityKind::dataset) {
            continue;
        }
        ++datasets;
        bool ok = has_value(entity, vocab::Name::license) || has_value(entity, vocab::Name::rights);
        if (!ok) {
            for (const auto& rel : model.relationships()) {
                if (rel.source != entity.id ||
                    rel.predicate.name != vocab::Name::distribution) {
                    continue;
                }
                const Entity* target = model.find(rel.target);
                if (target != nullptr && (has_value(*target, vocab::Name::license) ||
                                          has_value(*target, vocab::Name::rights))) {
                    ok = true;
                    break;
                }
            }
        }
        if (ok) {
            ++licensed;
        }
    }
    if (datasets == 0) {
        throw EmptyCatalogError("no datasets to score licensing for");
    }
    return 100.0 * static_cast<double>(licensed) / static_cast<double>(datasets);
}

}  // namespace dcatq::metrics
