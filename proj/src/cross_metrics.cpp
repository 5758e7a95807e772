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

#include "dcatq/cross_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>

#include "dcatq/datetime.hpp"
#include "dcatq/errors.hpp"
#include "dcatq/text.hpp"

namespace dcatq::metrics {
namespace {

using catalog::CatalogModel;
using catalog::Entity;
using catalog::EntityKind;

std::string normalized_value(const Entity& entity, vocab::Name name) {
    const rdf::RdfTerm* term = entity.value_of(name);
    if (term == nullptr) {
        return {};
    }
    return text::normalize_label(term->lexical);
}

std::optional<std::string> optional_key(const Entity& entity) {
    std::string key = normalized_value(entity, vocab::Name::identifier);
    if (key.empty()) {
        key = normalized_value(entity, vocab::Name::title);
    }
    if (key.empty()) {
        return std::nullopt;
    }
    return key;
}

std::vector<const Entity*> datasets_of(const CatalogModel& model) {
    std::vector<const Entity*> out;
    for (const Entity& entity : model.entities()) {
        if (entity.kind == EntityKind::dataset) {
            out.push_back(&entity);
        }
    }
    return out;
}

std::set<std::string> key_set(const CatalogModel& model) {
    std::set<std::string> keys;
    for (const Entity* dataset : datasets_of(model)) {
        if (auto key = optional_key(*dataset)) {
            keys.insert(std::move(*key));
        }
    }
    return keys;
}

/// Description text a dataset is matched on: title and description joined
/// with one space, either part optional.
std::string pair_text(const Entity& entity) {
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

double jaccard_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::set<std::string_view> sa(a.begin(), a.end());
    std::set<std::string_view> sb(b.begin(), b.end());
    if (sa.empty() && sb.empty()) {
        return 1.0;
    }
    std::size_t shared = 0;
    for (std::string_view token : sa) {
        shared += sb.count(token);
    }
    std::size_t either = sa.size() + sb.size() - shared;
    return static_cast<double>(shared) / static_cast<double>(either);
}

double cosine_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    std::map<std::string_view, std::int64_t> ta;
    std::map<std::string_view, std::int64_t> tb;
    for (std::string_view token : a) {
        ++ta[token];
    }
    for (std::string_view token : b) {
        ++tb[token];
    }
    std::int64_t dot = 0;
    std::int64_t norm_a = 0;
    std::int64_t norm_b = 0;
    for (const auto& [token, count] : ta) {
        norm_a += count * count;
        auto it = tb.find(token);
        if (it != tb.end()) {
            dot += count * it->second;
        }
    }
    for (const auto& [token, count] : tb) {
        norm_b += count * count;
    }
    // One sqrt over the product keeps self-similarity exactly 1.0: for
    // identical vectors the radicand is a perfect square.
    double denom = std::sqrt(static_cast<double>(norm_a) * static_cast<double>(norm_b));
    double value = static_cast<double>(dot) / denom;
    return std::clamp(value, 0.0, 1.0);
}

std::set<std::string> license_values(const CatalogModel& model) {
    std::set<std::string> values;
    for (const Entity& entity : model.entities()) {
        for (const auto& attr : entity.attributes) {
            if (attr.property.name != vocab::Name::license &&
                attr.property.name != vocab::Name::rights) {
                continue;
            }
            std::string value = text::normalize_label(attr.value.lexical);
            if (!value.empty()) {
                values.insert(std::move(value));
            }
        }
    }
    return values;
}

struct DateRange {
    std::int64_t min = 0;
    std::int64_t max = 0;
};

std::optional<DateRange> date_range(const CatalogModel& model) {
    std::optional<DateRange> range;
    for (const Entity& entity : model.entities()) {
        for (const auto& attr : entity.attributes) {
            if (attr.property.name != vocab::Name::issued &&
                attr.property.name != vocab::Name::modified) {
                continue;
            }
            auto when = datetime::parse_iso8601(attr.value.lexical);
            if (!when) {
                continue;
            }
            if (!range) {
                range = DateRange{*when, *when};
            } else {
                range->min = std::min(range->min, *when);
                range->max = std::max(range->max, *when);
            }
        }
    }
    return range;
}

}  // namespace

DatasetKey dataset_key(const Entity& entity) {
    auto key = optional_key(entity);
    if (!key) {
        throw KeyUnavailableError(entity.id);
    }
    return DatasetKey{std::move(*key)};
}

double compatibility(const CatalogModel& c1, const CatalogModel& c2) {
    std::set<std::string> k1 = key_set(c1);
    if (k1.empty()) {
        throw EmptyCatalogError("no keyable datasets in the reference catalog");
    }
    std::set<std::string> k2 = key_set(c2);
    std::size_t shared = 0;
    for (const std::string& key : k1) {
        shared += k2.count(key);
    }
    return 100.0 * static_cast<double>(shared) / static_cast<double>(k1.size());
}

double value_similarity(std::string_view a, std::string_view b, SimilarityMeasure measure) {
    std::vector<std::string> ta = text::tokenize(a);
    std::vector<std::string> tb = text::tokenize(b);
    if (measure == SimilarityMeasure::cosine) {
        return cosine_similarity(ta, tb);
    }
    return jaccard_similarity(ta, tb);
}

Pairing pair_objects(const CatalogModel& c1, const CatalogModel& c2, SimilarityMeasure measure,
                     double floor) {
    std::vector<const Entity*> left = datasets_of(c1);
    std::vector<const Entity*> right = datasets_of(c2);
    if (left.empty() || right.empty()) {
        throw EmptyCatalogError("both catalogs need at least one dataset to pair");
    }

    struct Candidate {
        double score;
        std::size_t i;
        std::size_t j;
    };
    std::vector<std::string> right_texts;
    right_texts.reserve(right.size());
    for (const Entity* entity : right) {
        right_texts.push_back(pair_text(*entity));
    }
    std::vector<Candidate> candidates;
    candidates.reserve(left.size() * right.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        std::string left_text = pair_text(*left[i]);
        for (std::size_t j = 0; j < right.size(); ++j) {
            double score = value_similarity(left_text, right_texts[j], measure);
            if (score >= floor) {
                candidates.push_back({score, i, j});
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });

    std::size_t wanted = std::min(left.size(), right.size());
    std::vector<bool> used_left(left.size(), false);
    std::vector<bool> used_right(right.size(), false);
    Pairing pairing;
    for (const Candidate& candidate : candidates) {
        if (pairing.pairs.size() == wanted) {
            break;
        }
        if (used_left[candidate.i] || used_right[candidate.j]) {
            continue;
        }
        used_left[candidate.i] = true;
        used_right[candidate.j] = true;
        pairing.pairs.push_back(
            {left[candidate.i]->id, right[candidate.j]->id, candidate.score});
    }
    return pairing;
}

double attribute_similarity(const CatalogModel& c1, const CatalogModel& c2,
                            SimilarityMeasure measure, double floor) {
    Pairing pairing = pair_objects(c1, c2, measure, floor);
    if (pairing.pairs.empty()) {
        throw EmptyCatalogError("no dataset pair clears the pairing floor");
    }
    double sum = 0.0;
    for (const PairedDatasets& pair : pairing.pairs) {
        sum += pair.score;
    }
    return 100.0 * sum / static_cast<double>(pairing.pairs.size());
}

std::vector<Finding> comparison_advisories(const CatalogModel& c1, const CatalogModel& c2) {
    std::vector<Finding> findings;

    std::set<std::string> l1 = license_values(c1);
    std::set<std::string> l2 = license_values(c2);
    if (!l1.empty() && !l2.empty()) {
        bool shared = std::any_of(l1.begin(), l1.end(),
                                  [&](const std::string& value) { return l2.count(value) > 0; });
        if (!shared) {
            findings.push_back({c1.catalog_node(), std::nullopt, "license_mismatch",
                                "the catalogs declare licenses but share none",
                                Severity::warning});
        }
    }

    auto r1 = date_range(c1);
    auto r2 = date_range(c2);
    if (r1 && r2 && (r1->max < r2->min || r2->max < r1->min)) {
        findings.push_back({c1.catalog_node(), std::nullopt, "temporal_gap",
                            "declared date ranges of the two catalogs do not overlap",
                            Severity::warning});
    }
    return findings;
}

}  // namespace dcatq::metrics
