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

#include "dcatq/assess.hpp"

#include <algorithm>
#include <cctype>
#include <ctime>
#include <map>
#include <set>
#include <utility>

#include "dcatq/core_metrics.hpp"
#include "dcatq/cross_metrics.hpp"
#include "dcatq/datetime.hpp"
#include "dcatq/errors.hpp"
#include "dcatq/noncore_metrics.hpp"

namespace dcatq::assess {
namespace {

using catalog::CatalogModel;
using report::Dimension;

std::string_view trim_view(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    return text;
}

bool is_url_name(vocab::Name name) {
    return name == vocab::Name::access_url || name == vocab::Name::download_url ||
           name == vocab::Name::landing_page;
}

struct UrlOwner {
    std::string entity;
    vocab::CanonicalProperty property;
};

/// Every distinct probeable value, remembering who declared it first.
std::map<std::string, UrlOwner> collect_urls(const CatalogModel& model) {
    std::map<std::string, UrlOwner> urls;
    for (const auto& entity : model.entities()) {
        for (const auto& attr : entity.attributes) {
            if (!is_url_name(attr.property.name)) {
                continue;
            }
            std::string url(trim_view(attr.value.lexical));
            if (!url.empty()) {
                urls.emplace(std::move(url), UrlOwner{entity.id, attr.property});
            }
        }
    }
    return urls;
}

bool is_http_url(std::string_view url) {
    auto starts_with = [&](std::string_view prefix) {
        if (url.size() < prefix.size()) {
            return false;
        }
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(url[i])) != prefix[i]) {
                return false;
            }
        }
        return true;
    };
    return starts_with("http://") || starts_with("https://");
}

std::vector<Dimension> effective_dimensions(const std::vector<Dimension>& requested) {
    if (requested.empty()) {
        return report::all_dimensions();
    }
    std::set<Dimension> wanted(requested.begin(), requested.end());
    std::vector<Dimension> out;
    for (Dimension dimension : report::all_dimensions()) {
        if (wanted.count(dimension) != 0) {
            out.push_back(dimension);
        }
    }
    return out;
}

bool needs_probes(Dimension dimension) {
    return dimension == Dimension::accuracy || dimension == Dimension::consistency ||
           dimension == Dimension::timeliness;
}

std::string stamp(const QualityConfig& config) {
    std::int64_t now = config.freshness_reference
                           ? *config.freshness_reference
                           : static_cast<std::int64_t>(std::time(nullptr));
    return datetime::format_iso8601(now);
}

report::DimensionScore compute_dimension(const CatalogModel& model, const QualityConfig& config,
                                         const net::ProbeMap& probes, Dimension dimension) {
    report::DimensionScore score;
    score.dimension = dimension;
    switch (dimension) {
        case Dimension::accuracy: {
            auto result = metrics::overall_accuracy(model, probes, config.alpha);
            score.value = result.value;
            score.details = std::move(result.findings);
            break;
        }
        case Dimension::completeness: {
            auto result = metrics::completeness(model, config);
            score.value = result.value;
            score.details = std::move(result.findings);
            break;
        }
        case Dimension::consistency: {
            auto result = metrics::consistency(model, config, probes);
            score.value = result.score;
            score.details = std::move(result.findings);
            break;
        }
        case Dimension::scalability:
            score.verdict = metrics::scalability_probe(model, config).verdict;
            break;
        case Dimension::timeliness: {
            auto result = metrics::timeliness(model, probes, config);
            score.verdict = result.verdict;
            score.details = std::move(result.freshness.findings);
            score.details.insert(score.details.end(), result.availability.findings.begin(),
                                 result.availability.findings.end());
            break;
        }
        case Dimension::provenance:
            score.value = metrics::provenance_score(model);
            break;
        case Dimension::readability:
            score.value = metrics::readability(model);
            break;
        case Dimension::licensing:
            score.value = metrics::licensing(model);
            break;
    }
    return score;
}

vocab::PredicateMap load_predicates(const QualityConfig& config) {
    if (config.predicate_map_path) {
        return vocab::PredicateMap::load(*config.predicate_map_path);
    }
    return vocab::PredicateMap::builtin();
}

}  // namespace

report::QualityReport assess_model(const CatalogModel& model, const std::string& source_label,
                                   const AssessOptions& options) {
    const QualityConfig& config = options.config;
    std::vector<Dimension> enabled = effective_dimensions(options.dimensions);

    std::vector<Finding> pipeline;
    net::ProbeMap probes;
    bool want_probes = options.probe_mode != ProbeMode::none &&
                       std::any_of(enabled.begin(), enabled.end(), needs_probes);
    if (want_probes) {
        std::map<std::string, UrlOwner> urls = collect_urls(model);
        if (options.probe_mode == ProbeMode::offline) {
            for (const auto& [url, owner] : urls) {
                if (auto hit = options.fixtures.lookup(url)) {
                    probes.emplace(url, std::move(*hit));
                }
            }
        } else {
            std::vector<std::string> list;
            list.reserve(urls.size());
            for (const auto& [url, owner] : urls) {
                list.push_back(url);
            }
            probes = net::probe_all(list, config.probe);
            for (const auto& [url, owner] : urls) {
                if (!is_http_url(url)) {
                    pipeline.push_back({owner.entity, owner.property, "unsupported_scheme",
                                        url + " is not an http(s) URL; counted as unreachable",
                                        Severity::warning});
                }
            }
        }
    }

    report::QualityReport out;
    out.catalog_source = source_label;
    out.assessed_at = stamp(config);
    out.config_digest = config.digest();
    for (auto kind : {catalog::EntityKind::catalog, catalog::EntityKind::dataset,
                      catalog::EntityKind::distribution}) {
        out.entity_counts[kind] = model.count_of(kind);
    }

    for (Dimension dimension : enabled) {
        try {
            out.dimensions.push_back(compute_dimension(model, config, probes, dimension));
        } catch (const ProbeMissingError&) {
            if (options.probe_mode != ProbeMode::none) {
                throw;
            }
            pipeline.push_back({model.catalog_node(), std::nullopt, "probes_skipped",
                                std::string(report::to_string(dimension)) +
                                    " skipped: needs URL probes but no probe source is configured",
                                Severity::warning});
        }
    }

    out.findings = std::move(pipeline);
    for (const auto& score : out.dimensions) {
        out.findings.insert(out.findings.end(), score.details.begin(), score.details.end());
    }
    return out;
}

report::QualityReport assess_source(const std::string& source, const AssessOptions& options) {
    vocab::PredicateMap predicates = load_predicates(options.config);
    CatalogModel model = catalog::load_catalog(source, {}, predicates);
    return assess_model(model, source, options);
}

report::ComparisonReport compare_models(const CatalogModel& c1, const CatalogModel& c2,
                                        const std::string& source1, const std::string& source2,
                                        const AssessOptions& options) {
    const QualityConfig& config = options.config;
    report::ComparisonReport out;
    out.source1 = source1;
    out.source2 = source2;
    out.assessed_at = stamp(config);
    out.config_digest = config.digest();
    out.compatibility_forward = metrics::compatibility(c1, c2);
    out.compatibility_backward = metrics::compatibility(c2, c1);
    out.pairing =
        metrics::pair_objects(c1, c2, config.similarity_measure, config.pairing_floor);
    if (out.pairing.pairs.empty()) {
        throw EmptyCatalogError("no dataset pair clears the pairing floor");
    }
    double sum = 0.0;
    for (const auto& pair : out.pairing.pairs) {
        sum += pair.score;
    }
    out.similarity = 100.0 * sum / static_cast<double>(out.pairing.pairs.size());
    out.advisories = metrics::comparison_advisories(c1, c2);
    return out;
}

report::ComparisonReport compare_sources(const std::string& source1, const std::string& source2,
                                         const AssessOptions& options) {
    vocab::PredicateMap predicates = load_predicates(options.config);
    CatalogModel c1 = catalog::load_catalog(source1, {}, predicates);
    CatalogModel c2 = catalog::load_catalog(source2, {}, predicates);
    return compare_models(c1, c2, source1, source2, options);
}

}  // namespace dcatq::assess
