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

// Acceptance gate: every release-blocking criterion runs here and prints one
// PASS / FAIL / SKIP line. The process exits nonzero iff any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dcatq/catalog.hpp"
#include "dcatq/config.hpp"
#include "dcatq/core_metrics.hpp"
#include "dcatq/cross_metrics.hpp"
#include "dcatq/errors.hpp"
#include "dcatq/net.hpp"
#include "dcatq/noncore_metrics.hpp"
#include "dcatq/rdf.hpp"
#include "dcatq/vocab.hpp"

using namespace dcatq;
using catalog::CatalogModel;
using catalog::Entity;
using catalog::EntityKind;
using catalog::RelationshipInstance;
using vocab::Name;

namespace {

const std::string kDataDir = DCATQ_TEST_DATA_DIR;

/// A criterion aborts with this to report an unmet requirement.
struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A criterion aborts with this when its preconditions cannot be met here.
struct CriterionSkip : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw CriterionFailure(message);
}

std::string fixed(double value, int digits = 2) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

bool in_percent_range(double value) { return value >= 0.0 && value <= 100.0; }

// ---------------------------------------------------------------------------
// Deterministic random catalog generation for the property checks.

struct GeneratedCatalog {
    CatalogModel model;
    net::ProbeMap probes;
};

constexpr std::array<std::string_view, 14> kWords = {
    "alpha", "beta",    "city",  "data",  "evening", "grid",  "harbor",
    "index", "ledger",  "map",   "noise", "river",   "stats", "week"};

constexpr std::array<std::string_view, 4> kContentTypes = {
    "text/csv", "application/json", "text/html", "application/octet-stream"};

/// Random catalog with up to `max_datasets` datasets plus distributions and a
/// probe map covering every generated URL. Same seed, same catalog.
GeneratedCatalog random_catalog(std::mt19937& rng, int tag, int max_datasets) {
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto chance = [&rng](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };
    auto phrase = [&](int count) {
        std::string out;
        for (int i = 0; i < count; ++i) {
            if (!out.empty()) out += ' ';
            out += kWords[static_cast<std::size_t>(pick(0, int(kWords.size()) - 1))];
        }
        return out;
    };
    auto date_value = [&]() -> std::string {
        int roll = pick(0, 9);
        if (roll == 0) return "not-a-date";
        if (roll == 1) return "2031-01-01";  // future relative to any test clock
        return "202" + std::to_string(pick(0, 3)) + "-0" + std::to_string(pick(1, 9)) +
               "-1" + std::to_string(pick(0, 9));
    };

    net::ProbeMap probes;
    int url_serial = 0;
    auto add_attr = [](Entity& entity, const char* predicate, rdf::RdfTerm value) {
        entity.attributes.push_back(
            {entity.id, vocab::normalize_predicate(predicate), std::move(value)});
    };
    auto add_url = [&](Entity& entity, const char* predicate) {
        std::string url = "http://fixture.test/" + std::to_string(tag) + "/u" +
                          std::to_string(url_serial++);
        net::ProbeResult probe;
        probe.url = url;
        if (chance(0.8)) {
            probe.outcome = net::ProbeOutcome::ok;
            probe.status_code = 200;
            probe.content_type =
                std::string(kContentTypes[static_cast<std::size_t>(pick(0, 3))]);
            probe.response_ms = pick(10, 6000);
        } else {
            probe.outcome = net::ProbeOutcome::http_error;
            probe.status_code = 404;
            probe.content_type = "text/html";
            probe.response_ms = 40;
        }
        probes.emplace(url, std::move(probe));
        add_attr(entity, predicate, rdf::RdfTerm::iri(url));
    };

    const std::string base = "http://rand.test/" + std::to_string(tag) + "/";
    std::vector<Entity> entities;
    std::vector<RelationshipInstance> relationships;

    Entity root{base + "catalog", EntityKind::catalog, {}};
    add_attr(root, "http://purl.org/dc/terms/title", rdf::RdfTerm::literal(phrase(3)));
    if (chance(0.7)) {
        add_attr(root, "http://purl.org/dc/terms/description",
                 rdf::RdfTerm::literal(phrase(6)));
    }
    if (chance(0.7)) {
        add_attr(root, "http://purl.org/dc/terms/publisher",
                 rdf::RdfTerm::literal(phrase(2)));
    }
    if (chance(0.5)) {
        add_attr(root, "http://purl.org/dc/terms/issued",
                 rdf::RdfTerm::literal(date_value()));
    }

    int dataset_count = pick(1, max_datasets);
    std::vector<std::string> dataset_ids;
    for (int i = 0; i < dataset_count; ++i) {
        Entity ds{base + "ds" + std::to_string(i), EntityKind::dataset, {}};
        if (i == 0 || chance(0.7)) {
            add_attr(ds, "http://purl.org/dc/terms/identifier",
                     rdf::RdfTerm::literal("key-" + std::to_string(pick(0, 9))));
        }
        add_attr(ds, "http://purl.org/dc/terms/title",
                 rdf::RdfTerm::literal(chance(0.1) ? std::string() : phrase(pick(1, 5))));
        if (chance(0.7)) {
            add_attr(ds, "http://purl.org/dc/terms/description",
                     rdf::RdfTerm::literal(phrase(pick(3, 12))));
        }
        if (chance(0.6)) {
            add_attr(ds, "http://purl.org/dc/terms/publisher",
                     rdf::RdfTerm::literal(phrase(2)));
        }
        if (chance(0.7)) {
            add_attr(ds, "http://purl.org/dc/terms/issued",
                     rdf::RdfTerm::literal(date_value()));
        }
        if (chance(0.4)) {
            add_attr(ds, "http://purl.org/dc/terms/modified",
                     rdf::RdfTerm::literal(date_value()));
        }
        if (chance(0.4)) {
            add_attr(ds, "http://purl.org/dc/terms/license",
                     rdf::RdfTerm::literal("license-" + std::to_string(pick(0, 2))));
        }
        if (chance(0.3)) {
            constexpr std::array<std::string_view, 4> langs = {"en", "de", "fr", "sv"};
            add_attr(ds, "http://purl.org/dc/terms/language",
                     rdf::RdfTerm::literal(
                         std::string(langs[static_cast<std::size_t>(pick(0, 3))])));
        }
        if (chance(0.5)) {
            add_attr(ds, "http://www.w3.org/ns/dcat#keyword",
                     rdf::RdfTerm::literal(phrase(1)));
        }
        if (chance(0.25)) {
            add_attr(ds, "http://purl.org/dc/terms/provenance",
                     rdf::RdfTerm::literal(phrase(5)));
        }
        if (chance(0.2)) {
            add_attr(ds, "http://purl.org/dc/terms/source",
                     rdf::RdfTerm::literal(phrase(2)));
        }
        if (!dataset_ids.empty() && chance(0.2)) {
            add_attr(ds, "http://www.w3.org/ns/prov#wasDerivedFrom",
                     rdf::RdfTerm::iri(dataset_ids[static_cast<std::size_t>(
                         pick(0, int(dataset_ids.size()) - 1))]));
        }
        if (chance(0.15)) {
            add_attr(ds, "http://www.w3.org/ns/prov#wasGeneratedBy",
                     rdf::RdfTerm::literal(phrase(4)));
        }

        relationships.push_back(
            {root.id, vocab::normalize_predicate("http://www.w3.org/ns/dcat#dataset"),
             ds.id});

        int dist_count = pick(0, 2);
        for (int j = 0; j < dist_count; ++j) {
            Entity dist{ds.id + "/dist" + std::to_string(j), EntityKind::distribution, {}};
            if (chance(0.15)) {
                add_attr(dist, "http://purl.org/dc/terms/title",
                         rdf::RdfTerm::literal("shared title"));
                add_attr(dist, "http://purl.org/dc/terms/description",
                         rdf::RdfTerm::literal("shared description"));
            } else if (chance(0.9)) {
                add_attr(dist, "http://purl.org/dc/terms/title",
                         rdf::RdfTerm::literal(phrase(2)));
            }
            if (chance(0.6)) {
                constexpr std::array<std::string_view, 4> formats = {"CSV", "JSON", "XML",
                                                                     "Widget"};
                add_attr(dist, "http://purl.org/dc/terms/format",
                         rdf::RdfTerm::literal(
                             std::string(formats[static_cast<std::size_t>(pick(0, 3))])));
            }
            if (chance(0.8)) add_url(dist, "http://www.w3.org/ns/dcat#accessURL");
            if (chance(0.3)) add_url(dist, "http://www.w3.org/ns/dcat#downloadURL");
            relationships.push_back(
                {ds.id,
                 vocab::normalize_predicate("http://www.w3.org/ns/dcat#distribution"),
                 dist.id});
            if (chance(0.1)) relationships.push_back(relationships.back());
            entities.push_back(std::move(dist));
        }
        if (chance(0.2)) {
            relationships.push_back(
                {ds.id,
                 vocab::normalize_predicate("http://www.w3.org/ns/dcat#distribution"),
                 base + "ghost" + std::to_string(i)});
        }
        dataset_ids.push_back(ds.id);
        entities.push_back(std::move(ds));
    }
    entities.push_back(std::move(root));

    std::size_t triples = relationships.size();
    for (const auto& entity : entities) triples += entity.attributes.size();
    require(entities.size() <= 50, "generated catalog exceeds the 50 entity bound");
    return {CatalogModel("", std::move(entities), std::move(relationships), triples),
            std::move(probes)};
}

/// Copy of the model with a non-blank description added wherever one is
/// missing; completeness must never decrease under this insertion.
CatalogModel with_descriptions(const CatalogModel& model) {
    std::vector<Entity> entities = model.entities();
    std::size_t added = 0;
    for (auto& entity : entities) {
        bool described = false;
        for (const auto& attr : entity.attributes) {
            if (attr.property.name == Name::description &&
                attr.value.lexical.find_first_not_of(" \t\r\n") != std::string::npos) {
                described = true;
                break;
            }
        }
        if (described) continue;
        entity.attributes.push_back(
            {entity.id, vocab::normalize_predicate("http://purl.org/dc/terms/description"),
             rdf::RdfTerm::literal("inserted descriptive text")});
        ++added;
    }
    std::vector<RelationshipInstance> relationships = model.relationships();
    return CatalogModel(model.catalog_node(), std::move(entities),
                        std::move(relationships), model.triple_count() + added);
}

std::set<std::string> oracle_key_set(const CatalogModel& model) {
    std::set<std::string> keys;
    for (const auto& entity : model.entities()) {
        if (entity.kind != EntityKind::dataset) continue;
        try {
            keys.insert(metrics::dataset_key(entity).key);
        } catch (const KeyUnavailableError&) {
        }
    }
    return keys;
}

std::size_t intersection_size(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
    std::size_t shared = 0;
    for (const auto& key : a) shared += b.count(key);
    return shared;
}

// ---------------------------------------------------------------------------
// Criterion 1: property suite over randomly generated catalogs.

std::string property_suite() {
    std::mt19937 rng(20240321u);
    const QualityConfig config = QualityConfig::defaults();
    constexpr int kCatalogs = 40;

    std::vector<GeneratedCatalog> corpus;
    corpus.reserve(kCatalogs);
    for (int i = 0; i < kCatalogs; ++i) corpus.push_back(random_catalog(rng, i, 8));

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int identity_checks = 0;
    for (int i = 0; i < kCatalogs; ++i) {
        const CatalogModel& model = corpus[static_cast<std::size_t>(i)].model;
        const net::ProbeMap& probes = corpus[static_cast<std::size_t>(i)].probes;
        const std::string where = " (catalog " + std::to_string(i) + ")";

        auto attr = metrics::attribute_level_accuracy(model, probes);
        auto rel = metrics::relationship_level_accuracy(model);
        require(in_percent_range(attr.value), "attribute accuracy out of range" + where);
        require(in_percent_range(rel.value), "relationship accuracy out of range" + where);

        for (double alpha : {0.0, unit(rng), 1.0}) {
            double blended = metrics::overall_accuracy(model, probes, alpha).value;
            require(blended == alpha * attr.value + (1.0 - alpha) * rel.value,
                    "accuracy blend is not exactly linear in alpha" + where);
            require(in_percent_range(blended), "blended accuracy out of range" + where);
        }

        auto complete = metrics::completeness(model, config);
        require(in_percent_range(complete.value), "completeness out of range" + where);
        double richer = metrics::completeness(with_descriptions(model), config).value;
        require(richer >= complete.value,
                "completeness decreased after inserting descriptions" + where);

        auto consistent = metrics::consistency(model, config, probes);
        require(in_percent_range(consistent.score), "consistency out of range" + where);
        require((consistent.score == 100.0) == consistent.violations.empty(),
                "consistency 100 must coincide with zero violations" + where);

        require(in_percent_range(metrics::provenance_score(model)),
                "provenance out of range" + where);
        require(in_percent_range(metrics::licensing(model)), "licensing out of range" + where);

        require(metrics::compatibility(model, model) == 100.0,
                "self compatibility must be exactly 100" + where);
        require(metrics::attribute_similarity(model, model, SimilarityMeasure::jaccard) ==
                    100.0,
                "jaccard self similarity must be exactly 100" + where);
        require(metrics::attribute_similarity(model, model, SimilarityMeasure::cosine) ==
                    100.0,
                "cosine self similarity must be exactly 100" + where);

        if (i == 0) continue;
        // comp(C1,C2)*|K1| and comp(C2,C1)*|K2| both equal 100*|K1 n K2|:
        // checked against the shared intersection count, which keeps the
        // identity exact instead of comparing two rounded products.
        const CatalogModel& other = corpus[static_cast<std::size_t>(i - 1)].model;
        std::set<std::string> k1 = oracle_key_set(model);
        std::set<std::string> k2 = oracle_key_set(other);
        double shared = static_cast<double>(intersection_size(k1, k2));
        require(metrics::compatibility(model, other) ==
                    100.0 * shared / static_cast<double>(k1.size()),
                "compatibility deviates from the set oracle" + where);
        require(metrics::compatibility(other, model) ==
                    100.0 * shared / static_cast<double>(k2.size()),
                "reverse compatibility deviates from the set oracle" + where);
        ++identity_checks;
    }

    return std::to_string(kCatalogs) + " random catalogs: scores within [0,100], " +
           "alpha blend exactly linear, completeness monotone under insertion, " +
           "consistency 100 iff clean, self comparison exactly 100, " +
           std::to_string(identity_checks) + " exact compatibility identities";
}

// ---------------------------------------------------------------------------
// Criterion 2: the golden fixture reproduces the hand-derived scores.

std::string golden_fixture() {
    CatalogModel model = catalog::load_catalog(kDataDir + "/golden.ttl");
    net::FixtureStore fixtures = net::FixtureStore::load(kDataDir + "/golden_fixtures.json");
    net::ProbeMap probes;
    for (const auto& entity : model.entities()) {
        for (const auto& attr : entity.attributes) {
            if (attr.property.name != Name::access_url &&
                attr.property.name != Name::download_url &&
                attr.property.name != Name::landing_page) {
                continue;
            }
            if (auto hit = fixtures.lookup(attr.value.lexical)) {
                probes.emplace(attr.value.lexical, *hit);
            }
        }
    }

    require(model.count_of(EntityKind::dataset) == 2, "golden catalog must hold 2 datasets");
    require(model.count_of(EntityKind::distribution) == 3,
            "golden catalog must hold 3 distributions");

    const QualityConfig config = QualityConfig::defaults();
    // Hand-derived ahead of time: 23 attribute occurrences with 2 defects
    // (empty title, broken download), 6 relationships with 1 dangling target,
    // 17 of 19 required cells filled, 1 of 6 entities inconsistent, 1 of 2
    // datasets licensed.
    double attr = metrics::attribute_level_accuracy(model, probes).value;
    require(attr == 100.0 * 21.0 / 23.0,
            "attribute accuracy expected " + fixed(100.0 * 21.0 / 23.0, 6) + ", got " +
                fixed(attr, 6));
    double rel = metrics::relationship_level_accuracy(model).value;
    require(rel == 100.0 * 5.0 / 6.0, "relationship accuracy expected " +
                                          fixed(100.0 * 5.0 / 6.0, 6) + ", got " +
                                          fixed(rel, 6));
    double complete = metrics::completeness(model, config).value;
    require(complete == 100.0 * 17.0 / 19.0, "completeness expected " +
                                                 fixed(100.0 * 17.0 / 19.0, 6) + ", got " +
                                                 fixed(complete, 6));
    double consistent = metrics::consistency(model, config, probes).score;
    require(consistent == 100.0 * 5.0 / 6.0, "consistency expected " +
                                                 fixed(100.0 * 5.0 / 6.0, 6) + ", got " +
                                                 fixed(consistent, 6));
    double licensed = metrics::licensing(model);
    require(licensed == 50.0, "licensing expected 50.00, got " + fixed(licensed));

    return "attribute " + fixed(attr) + "%, relationship " + fixed(rel) +
           "%, completeness " + fixed(complete) + "%, consistency " + fixed(consistent) +
           "%, licensing " + fixed(licensed) + "%, all exact";
}

// ---------------------------------------------------------------------------
// Criterion 3: readability grades match hand counts exactly.

std::string flesch_kincaid() {
    auto grade_of = [](double words, double sentences, double syllables) {
        return 0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59;
    };

    auto cat = metrics::flesch_kincaid("The cat sat on the mat.");
    require(cat.words == 6 && cat.sentences == 1 && cat.syllables == 6,
            "hand counts for the cat sentence are 6 words, 1 sentence, 6 syllables");
    require(std::abs(cat.grade - (-1.45)) <= 0.01,
            "cat sentence grade " + fixed(cat.grade, 4) + " is not within 0.01 of -1.45");

    struct HandGraded {
        std::string_view text;
        std::size_t words, sentences, syllables;
    };
    // Syllable counts follow the documented heuristic: vowel groups, silent
    // trailing e, consonant+le kept, minimum one.
    const std::array<HandGraded, 3> texts = {{
        {"Open data catalogs list datasets.", 5, 1, 11},
        {"Quality matters. Measure it!", 4, 2, 8},
        {"The whale table is little.", 5, 1, 7},
    }};
    for (const auto& sample : texts) {
        auto stats = metrics::flesch_kincaid(sample.text);
        require(stats.words == sample.words && stats.sentences == sample.sentences &&
                    stats.syllables == sample.syllables,
                "hand counts diverge for: " + std::string(sample.text));
        double expected = grade_of(static_cast<double>(sample.words),
                                   static_cast<double>(sample.sentences),
                                   static_cast<double>(sample.syllables));
        require(stats.grade == expected,
                "grade must equal the formula on hand counts for: " +
                    std::string(sample.text));
    }

    return "cat sentence at " + fixed(cat.grade, 2) + " (within 0.01 of -1.45), " +
           "3 hand-graded texts match exactly";
}

// ---------------------------------------------------------------------------
// Criterion 4: brute-force comparison oracles for small catalogs.

/// Title and description joined by one space, mirroring the pairing text.
std::string pairing_text(const Entity& entity) {
    std::string out;
    for (Name name : {Name::title, Name::description}) {
        const rdf::RdfTerm* term = entity.value_of(name);
        if (term == nullptr || term->lexical.empty()) continue;
        if (!out.empty()) out += ' ';
        out += term->lexical;
    }
    return out;
}

std::vector<const Entity*> datasets_of(const CatalogModel& model) {
    std::vector<const Entity*> out;
    for (const auto& entity : model.entities()) {
        if (entity.kind == EntityKind::dataset) out.push_back(&entity);
    }
    return out;
}

/// Best mean pair score over every matching of exactly `wanted` pairs.
double optimal_similarity(const std::vector<std::vector<double>>& scores,
                          std::size_t wanted) {
    std::size_t rows = scores.size();
    double best = -1.0;
    std::function<void(std::size_t, unsigned, std::size_t, double)> search =
        [&](std::size_t row, unsigned used, std::size_t count, double sum) {
            if (count == wanted) {
                best = std::max(best, sum);
                return;
            }
            if (row == rows || count + (rows - row) < wanted) return;
            search(row + 1, used, count, sum);
            for (std::size_t col = 0; col < scores[row].size(); ++col) {
                if (used & (1u << col)) continue;
                search(row + 1, used | (1u << col), count + 1, sum + scores[row][col]);
            }
        };
    search(0, 0u, 0, 0.0);
    return 100.0 * best / static_cast<double>(wanted);
}

std::string cross_catalog_brute_force() {
    std::mt19937 rng(404u);
    constexpr int kCatalogs = 8;
    std::vector<GeneratedCatalog> corpus;
    corpus.reserve(kCatalogs);
    for (int i = 0; i < kCatalogs; ++i) corpus.push_back(random_catalog(rng, 100 + i, 5));

    int pairs_checked = 0;
    double max_gap_jaccard = 0.0;
    double max_gap_cosine = 0.0;
    for (const auto& left : corpus) {
        std::set<std::string> k1 = oracle_key_set(left.model);
        for (const auto& right : corpus) {
            std::set<std::string> k2 = oracle_key_set(right.model);
            double shared = static_cast<double>(intersection_size(k1, k2));
            require(metrics::compatibility(left.model, right.model) ==
                        100.0 * shared / static_cast<double>(k1.size()),
                    "compatibility deviates from the set-arithmetic oracle");

            std::vector<const Entity*> rows = datasets_of(left.model);
            std::vector<const Entity*> cols = datasets_of(right.model);
            std::size_t wanted = std::min(rows.size(), cols.size());
            for (SimilarityMeasure measure :
                 {SimilarityMeasure::jaccard, SimilarityMeasure::cosine}) {
                std::vector<std::vector<double>> scores(rows.size());
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    for (std::size_t j = 0; j < cols.size(); ++j) {
                        scores[i].push_back(metrics::value_similarity(
                            pairing_text(*rows[i]), pairing_text(*cols[j]), measure));
                    }
                }
                double greedy =
                    metrics::attribute_similarity(left.model, right.model, measure);
                double optimal = optimal_similarity(scores, wanted);
                double gap = optimal - greedy;
                require(gap >= -1e-9, "greedy similarity exceeds the optimal assignment");
                double& max_gap = measure == SimilarityMeasure::jaccard ? max_gap_jaccard
                                                                        : max_gap_cosine;
                max_gap = std::max(max_gap, gap);
            }
            ++pairs_checked;
        }
    }

    // The greedy gap is measured and reported, not bounded: greedy matching
    // is the documented pairing rule.
    return std::to_string(pairs_checked) +
           " catalog pairs: compatibility exact against the set oracle; max greedy " +
           "shortfall vs optimal assignment " + fixed(max_gap_jaccard, 4) +
           " points (jaccard), " + fixed(max_gap_cosine, 4) + " points (cosine)";
}

// ---------------------------------------------------------------------------
// Criterion 5: scalability harness verdicts.

std::string scalability_harness() {
    CatalogModel model = catalog::load_catalog(kDataDir + "/golden.ttl");
    const QualityConfig config = QualityConfig::defaults();

    auto linear = metrics::scalability_probe(model, config);
    require(linear.samples.size() == config.scalability_sizes.size(),
            "one sample per configured size expected");
    double first = linear.samples.front().per_record_ns();
    double last = linear.samples.back().per_record_ns();
    require(linear.verdict,
            "completeness scan expected verdict yes; per-record ns went " + fixed(first, 1) +
                " to " + fixed(last, 1) + " (ratio " + fixed(last / first) + ")");

    auto quadratic_cost = [](const CatalogModel& scaled, const QualityConfig&) {
        std::size_t records = scaled.count_of(EntityKind::dataset);
        volatile std::uint64_t sink = 0;
        for (std::size_t i = 0; i < records * records / 4; ++i) sink = sink + i;
    };
    auto quadratic = metrics::scalability_probe(model, config, quadratic_cost);
    require(!quadratic.verdict, "quadratic test double expected verdict no");
    double qfirst = quadratic.samples.front().per_record_ns();
    double qlast = quadratic.samples.back().per_record_ns();

    return "sizes 250..4000: completeness scan yes (per-record ratio " +
           fixed(last / first) + "), injected quadratic no (ratio " +
           fixed(qlast / qfirst) + ")";
}

// ---------------------------------------------------------------------------
// Criterion 6: reproduction of previously recorded portal assessments.

struct PortalReference {
    std::string_view stem;
    double licensing;
    double readability;
    double completeness;
};

std::string portal_reproduction() {
    // Offline-recomputable dimensions with their previously recorded values;
    // accuracy, consistency and timeliness depend on the network state of the
    // original assessment date and are excluded.
    const std::array<PortalReference, 4> portals = {{
        {"hadea", 25.0, 17.70, 88.90},
        {"euromaps", 40.0, 15.13, 81.48},
        {"europeana", 100.0, 10.60, 77.78},
        {"easa", 100.0, 7.90, 83.34},
    }};

    const std::string dir = kDataDir + "/portals";
    if (!std::filesystem::exists(dir)) {
        throw CriterionSkip(
            "needs archived snapshots of the hadea, euromaps, europeana and easa "
            "catalogs under tests/data/portals/; none are bundled and this "
            "environment has no network access");
    }

    std::string summary;
    for (const auto& portal : portals) {
        std::string source;
        for (const char* ext : {".ttl", ".rdf", ".xml"}) {
            std::string candidate = dir + "/" + std::string(portal.stem) + ext;
            if (std::filesystem::exists(candidate)) {
                source = candidate;
                break;
            }
        }
        if (source.empty()) {
            throw CriterionSkip("snapshot for " + std::string(portal.stem) +
                                " is missing under tests/data/portals/");
        }
        CatalogModel model = catalog::load_catalog(source);
        require(metrics::provenance_score(model) == 0.0,
                std::string(portal.stem) + ": provenance must be exactly 0");
        require(std::abs(metrics::licensing(model) - portal.licensing) <= 10.0,
                std::string(portal.stem) + ": licensing outside 10 points of record");
        require(std::abs(metrics::readability(model) - portal.readability) <= 3.0,
                std::string(portal.stem) + ": readability outside 3 grades of record");
        require(std::abs(metrics::completeness(model, QualityConfig::defaults()).value -
                         portal.completeness) <= 10.0,
                std::string(portal.stem) + ": completeness outside 10 points of record");
        summary += summary.empty() ? std::string(portal.stem) : ", " + std::string(portal.stem);
    }
    return "recomputed provenance, licensing, readability and completeness for " + summary;
}

// ---------------------------------------------------------------------------
// Criterion 7: offline assessment is byte-deterministic.

std::string run_cli_stdout(const std::string& args) {
    namespace fs = std::filesystem;
    static int serial = 0;
    fs::path out_path = fs::temp_directory_path() /
                        ("dcatq_acceptance_" + std::to_string(::getpid()) + "_" +
                         std::to_string(serial++) + ".out");
    std::string command = std::string(DCATQ_BINARY_PATH) + " " + args + " > " +
                          out_path.string() + " 2> /dev/null";
    int status = std::system(command.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    fs::remove(out_path);
    require(WIFEXITED(status) && WEXITSTATUS(status) == 0,
            "assess run did not exit cleanly");
    return buffer.str();
}

std::string determinism() {
    const std::string args = "assess " + kDataDir + "/golden.ttl --offline " + kDataDir +
                             "/golden_fixtures.json --config " + kDataDir +
                             "/golden_config.json --format json";
    std::string first = run_cli_stdout(args);
    std::string second = run_cli_stdout(args);
    require(!first.empty(), "assess produced no output");
    require(first == second, "two offline runs differ byte for byte");
    return "two offline runs emitted byte-identical JSON (" +
           std::to_string(first.size()) + " bytes)";
}

// ---------------------------------------------------------------------------

struct Criterion {
    const char* name;
    double budget_seconds;  // 0 = no individual budget
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"property_suite", 30.0, property_suite},
        {"golden_fixture", 5.0, golden_fixture},
        {"flesch_kincaid", 0.0, flesch_kincaid},
        {"cross_catalog_brute_force", 30.0, cross_catalog_brute_force},
        {"scalability_harness", 60.0, scalability_harness},
        {"portal_reproduction", 0.0, portal_reproduction},
        {"determinism", 0.0, determinism},
    };

    int failed = 0;
    int skipped = 0;
    for (const auto& criterion : criteria) {
        auto started = std::chrono::steady_clock::now();
        std::string status;
        std::string detail;
        try {
            detail = criterion.run();
            status = "PASS";
        } catch (const CriterionSkip& skip) {
            status = "SKIP";
            detail = skip.what();
            ++skipped;
        } catch (const std::exception& error) {
            status = "FAIL";
            detail = error.what();
            ++failed;
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       started)
                             .count();
        if (status == "PASS" && criterion.budget_seconds > 0.0 &&
            elapsed > criterion.budget_seconds) {
            status = "FAIL";
            detail = "finished in " + fixed(elapsed, 1) + "s, over the " +
                     fixed(criterion.budget_seconds, 0) + "s budget; " + detail;
            ++failed;
        }
        std::cout << status << " " << criterion.name << ": " << detail << " ["
                  << fixed(elapsed, 2) << "s]\n";
    }

    std::cout << "acceptance: " << (criteria.size() - failed - skipped) << " passed, "
              << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? 0 : 1;
}
