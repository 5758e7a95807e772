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

#include <cstddef>
#include <string_view>

#include "dcatq/catalog.hpp"

namespace dcatq::metrics {

/// The six lineage facets a dataset can document.
struct ProvenanceIndicators {
    bool lineage_statement = false;   // dct:provenance
    bool ancestors = false;           // prov:wasDerivedFrom / dct:source links out
    bool descendants = false;         // another dataset derives from this one
    bool generation_activity = false; // prov:wasGeneratedBy
    bool data_source = false;         // dct:source
    bool processing_steps = false;    // textual prov:wasGeneratedBy statement

    int count() const {
        return int(lineage_statement) + int(ancestors) + int(descendants) +
               int(generation_activity) + int(data_source) + int(processing_steps);
    }
};

ProvenanceIndicators provenance_indicators(const catalog::CatalogModel& model,
                                           const catalog::Entity& dataset);

/// 100 * mean(indicators/6) over all datasets. Throws EmptyCatalogError
/// when the model has no datasets.
double provenance_score(const catalog::CatalogModel& model);

/// Heuristic English syllable count: maximal vowel groups (aeiouy), minus a
/// silent trailing 'e' unless it ends a consonant+"le", never below 1.
/// Non-letters are stripped first; a word without letters counts as 1.
int count_syllables(std::string_view word);

struct ReadabilityStats {
    std::size_t words = 0;
    std::size_t sentences = 0;
    std::size_t syllables = 0;
    double grade = 0.0;
};

/// Flesch-Kincaid grade level of free text. Sentences are runs of '.', '!'
/// or '?' (at least 1); words are whitespace tokens containing a letter or
/// digit. Throws NoWordsError when no word is found.
ReadabilityStats flesch_kincaid(std::string_view text);

/// Mean grade over every dataset with title or description text. Throws
/// NoWordsError when no dataset has countable text.
double readability(const catalog::CatalogModel& model);

/// Share of datasets that carry a license or rights statement themselves or
/// on at least one of their distributions. Throws EmptyCatalogError when
/// the model has no datasets.
double licensing(const catalog::CatalogModel& model);

}  // namespace dcatq::metrics
