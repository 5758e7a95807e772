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

#include "dcatq/core_metrics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <map>
#include <set>
#include <tuple>

#include "dcatq/datetime.hpp"
#include "dcatq/errors.hpp"
#include "dcatq/text.hpp"

namespace dcatq::metrics {
namespace {

using catalog::AttributeOccurrence;
using catalog::CatalogModel;
using catalog::Entity;
using catalog::EntityKind;
using catalog::RelationshipInstance;
using vocab::Name;

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' ||
                          s.front() == '\r' || s.front() == '\f' || s.front() == '\v')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                          s.back() == '\r' || s.back() == '\f' || s.back() == '\v')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_date_property(Name name) { return name == Name::issued || name == Name::modified; }

bool is_url_property(Name name) {
    return name == Name::access_url || name == Name::download_url || name == Name::landing_page;
}

rdf::RdfTerm term_from_id(const std::string& id) {
    if (id.rfind("_:", 0) == 0) return rdf::RdfTerm::blank(id);
    return rdf::RdfTerm::iri(id);
}

rdf::Triple triple_of(const AttributeOccurrence& attr) {
    return {term_from_id(attr.owner), attr.property.raw_predicate, attr.value};
}

const net::ProbeResult& require_probe(const net::ProbeMap& probes, std::string_view url) {
    auto it = probes.find(url);
    if (it == probes.end()) throw ProbeMissingError(std::string(url));
    return it->second;
}

std::string describe_probe(const net::ProbeResult& result) {
    std::string out(net::to_string(result.outcome));
    if (result.status_code) out += " (HTTP " + std::to_string(*result.status_code) + ")";
    return out;
}

/// Per-relationship error flags, computed in one deterministic pass.
struct RelationshipFlags {
    bool dangling = false;
    bool duplicate = false;
    bool duplicate_info = false;
    std::string note;

    bool any() const { return dangling || duplicate || duplicate_info; }
};

std::vector<RelationshipFlags> analyze_relationships(const CatalogModel& model) {
    const auto& rels = model.relationships();
    std::vector<RelationshipFlags> flags(rels.size());

    std::set<std::tuple<std::string_view, std::string_view, std::string_view, std::string_view>>
        seen;
    // (source, normalized title + description) -> first target carrying it
    std::map<std::pair<std::string_view, std::string>, std::string_view> content_seen;

    for (std::size_t i = 0; i < rels.size(); ++i) {
        const auto& rel = rels[i];
        auto identity = std::make_tuple(
            std::string_view(rel.source), vocab::to_string(rel.predicate.name),
            std::string_view(rel.predicate.raw_predicate), std::string_view(rel.target));
        if (!seen.insert(identity).second) {
            flags[i].duplicate = true;
            flags[i].note = "repeats an earlier identical link to " + rel.target;
            continue;
        }

        const Entity* target = model.find(rel.target);
        if (target == nullptr) {
            flags[i].dangling = true;
            flags[i].note = "target " + rel.target + " has no triples in the catalog";
            continue;
        }

        const rdf::RdfTerm* title = target->value_of(Name::title);
        const rdf::RdfTerm* description = target->value_of(Name::description);
        std::string content = text::normalize_label(title ? title->lexical : "");
        content += '\x1f';
        content += text::normalize_label(description ? description->lexical : "");
        if (content.size() > 1) {  // skip targets with no text at all
            auto key = std::make_pair(std::string_view(rel.source), std::move(content));
            auto [it, inserted] = content_seen.emplace(std::move(key), rel.target);
            if (!inserted && it->second != rel.target) {
                flags[i].duplicate_info = true;
                flags[i].note = "target " + rel.target + " duplicates the content of " +
                                std::string(it->second);
            }
        }
    }
    return flags;
}

std::string group_label(const RequirementGroup& group) {
    std::string out;
    for (auto name : group.any_of) {
        if (!out.empty()) out += " or ";
        out += vocab::to_string(name);
    }
    return out;
}

enum class FormatFamily { none, csv, json, xml, html, spreadsheet, pdf, archive };

std::string_view to_string(FormatFamily family) {
    switch (family) {
        case FormatFamily::none: return "none";
        case FormatFamily::csv: return "csv";
        case FormatFamily::json: return "json";
        case FormatFamily::xml: return "xml";
        case FormatFamily::html: return "html";
        case FormatFamily::spreadsheet: return "spreadsheet";
        case FormatFamily::pdf: return "pdf";
        case FormatFamily::archive: return "archive";
    }
    return "none";
}

std::string lower_media(std::string_view value) {
    auto semi = value.find(';');
    std::string out(trim_view(value.substr(0, semi)));
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

FormatFamily family_from_media_type(std::string_view media_type) {
    std::string mt = lower_media(media_type);
    if (mt == "text/csv" || mt == "application/csv") return FormatFamily::csv;
    if (mt == "application/json" || mt == "application/ld+json" || mt == "text/json") {
        return FormatFamily::json;
    }
    if (mt == "application/xml" || mt == "text/xml" || mt == "application/rdf+xml" ||
        mt == "application/atom+xml") {
        return FormatFamily::xml;
    }
    if (mt == "text/html" || mt == "application/xhtml+xml") return FormatFamily::html;
    if (mt == "application/vnd.ms-excel" ||
        mt == "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet" ||
        mt == "application/vnd.oasis.opendocument.spreadsheet") {
        return FormatFamily::spreadsheet;
    }
    if (mt == "application/pdf") return FormatFamily::pdf;
    if (mt == "application/zip" || mt == "application/gzip" || mt == "application/x-gzip" ||
        mt == "application/x-tar") {
        return FormatFamily::archive;
    }
    // text/plain and application/octet-stream are too generic to contradict
    // anything.
    return FormatFamily::none;
}

/// Declared formats arrive as free text ("CSV"), vocabulary IRIs
/// (".../file-type/CSV"), or media types; match on word tokens.
FormatFamily family_from_declared(std::string_view declared) {
    FormatFamily as_media = family_from_media_type(declared);
    if (as_media != FormatFamily::none) return as_media;
    for (const auto& token : text::tokenize(declared)) {
        if (token == "csv") return FormatFamily::csv;
        if (token == "json" || token == "geojson") return FormatFamily::json;
        if (token == "xml" || token == "rdf") return FormatFamily::xml;
        if (token == "html" || token == "xhtml") return FormatFamily::html;
        if (token == "xls" || token == "xlsx" || token == "excel" || token == "ods" ||
            token == "spreadsheet") {
            return FormatFamily::spreadsheet;
        }
        if (token == "pdf") return FormatFamily::pdf;
        if (token == "zip" || token == "gzip" || token == "gz" || token == "tar") {
            return FormatFamily::archive;
        }
    }
    return FormatFamily::none;
}

/// Primary language subtag ("en-GB" -> "en", EU authority codes -> ISO 639-1).
std::string declared_language(std::string_view value) {
    std::string_view v = trim_view(value);
    auto slash = v.find_last_of('/');
    if (slash != std::string_view::npos) v = v.substr(slash + 1);
    std::string lower;
    for (char c : v) {
        if (c == '-' || c == '_') break;
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    static const std::map<std::string_view, std::string_view> three_letter = {
        {"eng", "en"}, {"deu", "de"}, {"ger", "de"}, {"fra", "fr"},
        {"fre", "fr"}, {"spa", "es"}, {"ita", "it"}};
    auto it = three_letter.find(lower);
    if (it != three_letter.end()) return std::string(it->second);
    return lower;
}

}  // namespace

double attribute_error(const AttributeOccurrence& attr, const net::ProbeMap& probes) {
    std::string_view value = trim_view(attr.value.lexical);
    if (value.empty()) return 1.0;
    if (is_date_property(attr.property.name)) {
        return datetime::parse_iso8601(value) ? 0.0 : 1.0;
    }
    if (is_url_property(attr.property.name)) {
        return require_probe(probes, value).ok() ? 0.0 : 1.0;
    }
    return 0.0;
}

ScoreWithFindings attribute_level_accuracy(const CatalogModel& model,
                                           const net::ProbeMap& probes) {
    std::size_t m = model.attribute_count();
    if (m == 0) throw EmptyCatalogError("no attribute occurrences to assess");

    ScoreWithFindings out;
    std::size_t errors = 0;
    for (const auto& entity : model.entities()) {
        for (const auto& attr : entity.attributes) {
            std::string_view value = trim_view(attr.value.lexical);
            std::string rule, message;
            if (value.empty()) {
                rule = "empty_value";
                message = "value of " + std::string(vocab::to_string(attr.property.name)) +
                          " is empty";
            } else if (is_date_property(attr.property.name) &&
                       !datetime::parse_iso8601(value)) {
                rule = "invalid_date";
                message = "'" + std::string(value) + "' is not a valid ISO-8601 date";
            } else if (is_url_property(attr.property.name)) {
                const auto& probe = require_probe(probes, value);
                if (!probe.ok()) {
                    rule = "broken_link";
                    message = std::string(value) + ": " + describe_probe(probe);
                }
            }
            if (rule.empty()) continue;
            ++errors;
            out.findings.push_back(
                {entity.id, attr.property, std::move(rule), std::move(message), Severity::error});
        }
    }
    out.value = 100.0 * static_cast<double>(m - errors) / static_cast<double>(m);
    return out;
}

double relationship_error(const CatalogModel& model, std::size_t index) {
    auto flags = analyze_relationships(model);
    return index < flags.size() && flags[index].any() ? 1.0 : 0.0;
}

ScoreWithFindings relationship_level_accuracy(const CatalogModel& model) {
    const auto& rels = model.relationships();
    if (rels.empty()) {
        ScoreWithFindings out;
        out.value = 100.0;
        out.findings.push_back({model.catalog_node(), std::nullopt, "no_relationships",
                                "catalog declares no entity-to-entity relationships",
                                Severity::warning});
        return out;
    }

    auto flags = analyze_relationships(model);
    ScoreWithFindings out;
    std::size_t errors = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        if (!flags[i].any()) continue;
        ++errors;
        std::string rule = flags[i].dangling ? "dangling_reference"
                           : flags[i].duplicate ? "duplicate_relationship"
                                                : "duplicate_information";
        out.findings.push_back({rels[i].source, rels[i].predicate, std::move(rule),
                                flags[i].note, Severity::error});
    }
    out.value = 100.0 * static_cast<double>(rels.size() - errors) /
                static_cast<double>(rels.size());
    return out;
}

ScoreWithFindings overall_accuracy(const CatalogModel& model, const net::ProbeMap& probes,
                                   double alpha) {
    ScoreWithFindings attr = attribute_level_accuracy(model, probes);
    ScoreWithFindings rel = relationship_level_accuracy(model);
    ScoreWithFindings out;
    out.value = alpha * attr.value + (1.0 - alpha) * rel.value;
    out.findings = std::move(attr.findings);
    out.findings.insert(out.findings.end(), std::make_move_iterator(rel.findings.begin()),
                        std::make_move_iterator(rel.findings.end()));
    return out;
}

ScoreWithFindings completeness(const CatalogModel& model, const QualityConfig& config) {
    ScoreWithFindings out;
    std::size_t satisfied = 0;
    std::size_t total = 0;
    const auto& entities = model.entities();
    for (std::size_t i = 0; i < entities.size(); ++i) {
        const auto& entity = entities[i];
        auto req = config.required_attributes.find(entity.kind);
        if (req != config.required_attributes.end()) {
            // The model's presence bitmasks keep this scan on a few bytes per
            // entity; the scalability harness times it on large catalogs.
            std::uint32_t present_names = model.nonblank_attribute_names(i);
            for (const auto& group : req->second) {
                ++total;
                bool present = false;
                for (auto name : group.any_of) {
                    if ((present_names >> static_cast<int>(name)) & std::uint32_t{1}) {
                        present = true;
                        break;
                    }
                }
                if (present) {
                    ++satisfied;
                } else {
                    out.findings.push_back(
                        {entity.id, vocab::CanonicalProperty{group.any_of.front(), ""},
                         "missing_required", "missing required " + group_label(group),
                         Severity::error});
                }
            }
        }
        for (const auto& [kind, name] : config.required_relationships) {
            if (kind != entity.kind) continue;
            ++total;
            if ((model.outgoing_relationship_names(i) >> static_cast<int>(name)) &
                std::uint32_t{1}) {
                ++satisfied;
            } else {
                out.findings.push_back({entity.id, vocab::CanonicalProperty{name, ""},
                                        "missing_required",
                                        "missing required " +
                                            std::string(vocab::to_string(name)) + " link",
                                        Severity::error});
            }
        }
    }
    if (total == 0) throw EmptyCatalogError("no completeness requirements apply to this catalog");
    out.value = 100.0 * static_cast<double>(satisfied) / static_cast<double>(total);
    return out;
}

ConsistencyResult consistency(const CatalogModel& model, const QualityConfig& config,
                              const net::ProbeMap& probes) {
    ConsistencyResult out;
    std::set<std::pair<std::string, std::string>> flagged;  // (entity, rule)
    auto enabled = [&config](std::string_view rule) {
        return config.consistency_rules.count(std::string(rule)) != 0;
    };
    auto push = [&out, &flagged](const std::string& entity, std::string rule,
                                 std::vector<rdf::Triple> triples, std::string message,
                                 std::optional<vocab::CanonicalProperty> property) {
        ConsistencyViolation violation{entity, std::move(rule), std::move(triples)};
        if (!flagged.insert({entity, violation.rule}).second) return;
        out.findings.push_back({entity, std::move(property), violation.rule, std::move(message),
                                Severity::error});
        out.violations.push_back(std::move(violation));
    };

    if (enabled("R1_date_order")) {
        for (const auto& entity : model.entities()) {
            const AttributeOccurrence* latest_issued = nullptr;
            const AttributeOccurrence* earliest_modified = nullptr;
            std::int64_t issued_max = 0;
            std::int64_t modified_min = 0;
            for (const auto& attr : entity.attributes) {
                if (!is_date_property(attr.property.name)) continue;
                auto parsed = datetime::parse_iso8601(trim_view(attr.value.lexical));
                if (!parsed) continue;
                if (attr.property.name == Name::issued) {
                    if (!latest_issued || *parsed > issued_max) {
                        latest_issued = &attr;
                        issued_max = *parsed;
                    }
                } else if (!earliest_modified || *parsed < modified_min) {
                    earliest_modified = &attr;
                    modified_min = *parsed;
                }
            }
            if (latest_issued && earliest_modified && modified_min < issued_max) {
                push(entity.id, "R1_date_order",
                     {triple_of(*earliest_modified), triple_of(*latest_issued)},
                     "modified (" + datetime::format_iso8601(modified_min) +
                         ") precedes issued (" + datetime::format_iso8601(issued_max) + ")",
                     earliest_modified->property);
            }
        }
    }

    if (enabled("R2_duplicate_label")) {
        // (kind, label kind, normalized value) -> owners of that label
        std::map<std::tuple<EntityKind, Name, std::string>,
                 std::vector<const AttributeOccurrence*>>
            labels;
        for (const auto& entity : model.entities()) {
            for (auto name : {Name::identifier, Name::title}) {
                const rdf::RdfTerm* value = entity.value_of(name);
                if (value == nullptr) continue;
                std::string normalized = text::normalize_label(value->lexical);
                if (normalized.empty()) continue;
                for (const auto& attr : entity.attributes) {
                    if (attr.property.name == name && &attr.value == value) {
                        labels[{entity.kind, name, std::move(normalized)}].push_back(&attr);
                        break;
                    }
                }
            }
        }
        for (const auto& [key, owners] : labels) {
            if (owners.size() < 2) continue;
            for (const auto* attr : owners) {
                push(attr->owner, "R2_duplicate_label", {triple_of(*attr)},
                     "duplicate " + std::string(vocab::to_string(std::get<1>(key))) + " '" +
                         std::get<2>(key) + "'",
                     attr->property);
            }
        }
    }

    if (enabled("R3_language_mismatch")) {
        for (const auto& entity : model.entities()) {
            const rdf::RdfTerm* language = entity.value_of(Name::language);
            if (language == nullptr) continue;
            std::string declared = declared_language(language->lexical);
            if (declared != "en" && declared != "de" && declared != "fr" && declared != "es" &&
                declared != "it") {
                continue;
            }
            const rdf::RdfTerm* title = entity.value_of(Name::title);
            const rdf::RdfTerm* description = entity.value_of(Name::description);
            std::string content = title ? title->lexical : "";
            if (description != nullptr) {
                if (!content.empty()) content += ' ';
                content += description->lexical;
            }
            auto detected = text::detect_language(content);
            if (!detected || *detected == declared) continue;

            std::vector<rdf::Triple> triples;
            std::optional<vocab::CanonicalProperty> prop;
            for (const auto& attr : entity.attributes) {
                if (attr.property.name == Name::language && &attr.value == language) {
                    triples.push_back(triple_of(attr));
                    prop = attr.property;
                }
                if ((attr.property.name == Name::title && &attr.value == title) ||
                    (attr.property.name == Name::description && &attr.value == description)) {
                    triples.push_back(triple_of(attr));
                }
            }
            push(entity.id, "R3_language_mismatch", std::move(triples),
                 "declared language '" + declared + "' but the text reads as '" + *detected + "'",
                 prop);
        }
    }

    if (enabled("R4_format_mismatch")) {
        for (const auto& entity : model.entities()) {
            std::vector<const AttributeOccurrence*> declared;
            for (const auto& attr : entity.attributes) {
                if (attr.property.name != Name::format && attr.property.name != Name::media_type) {
                    continue;
                }
                if (family_from_declared(attr.value.lexical) != FormatFamily::none) {
                    declared.push_back(&attr);
                }
            }
            if (declared.empty()) continue;
            for (const auto& attr : entity.attributes) {
                if (attr.property.name != Name::access_url &&
                    attr.property.name != Name::download_url) {
                    continue;
                }
                std::string_view url = trim_view(attr.value.lexical);
                if (url.empty()) continue;
                const auto& probe = require_probe(probes, url);
                if (!probe.ok() || !probe.content_type) continue;
                FormatFamily served = family_from_media_type(*probe.content_type);
                if (served == FormatFamily::none) continue;
                // An HTML page behind an access URL is a landing page, not
                // the data itself.
                if (served == FormatFamily::html && attr.property.name == Name::access_url) {
                    continue;
                }
                for (const auto* decl : declared) {
                    FormatFamily wanted = family_from_declared(decl->value.lexical);
                    if (wanted == served) continue;
                    push(entity.id, "R4_format_mismatch", {triple_of(*decl), triple_of(attr)},
                         "declared " + std::string(to_string(wanted)) + " ('" +
                             decl->value.lexical + "') but " + std::string(url) + " serves " +
                             std::string(to_string(served)) + " (" + *probe.content_type + ")",
                         decl->property);
                }
            }
        }
    }

    std::set<std::string_view> dirty;
    for (const auto& violation : out.violations) dirty.insert(violation.entity);
    auto total = model.entities().size();
    out.score = 100.0 * static_cast<double>(total - dirty.size()) / static_cast<double>(total);
    return out;
}

catalog::CatalogModel synthesize_scaled(const CatalogModel& model, int n_records) {
    std::vector<const Entity*> datasets;
    for (const auto& entity : model.entities()) {
        if (entity.kind == EntityKind::dataset) datasets.push_back(&entity);
    }
    if (datasets.empty()) {
        throw InsufficientDataError("no datasets to replicate for the scalability harness");
    }

    std::map<std::string_view, std::vector<const RelationshipInstance*>> outgoing;
    for (const auto& rel : model.relationships()) {
        outgoing[std::string_view(rel.source)].push_back(&rel);
    }

    std::vector<Entity> entities;
    std::vector<RelationshipInstance> relationships;
    std::size_t triples = 0;
    for (const auto& entity : model.entities()) {
        if (entity.kind != EntityKind::distribution) continue;
        entities.push_back(entity);
        triples += entity.attributes.size();
    }
    for (int k = 0; k < n_records; ++k) {
        const Entity* original = datasets[static_cast<std::size_t>(k) % datasets.size()];
        Entity clone;
        clone.id = original->id + "#replica-" + std::to_string(k);
        clone.kind = EntityKind::dataset;
        clone.attributes.reserve(original->attributes.size());
        for (const auto& attr : original->attributes) {
            clone.attributes.push_back({clone.id, attr.property, attr.value});
        }
        triples += clone.attributes.size();
        auto rels = outgoing.find(std::string_view(original->id));
        if (rels != outgoing.end()) {
            for (const auto* rel : rels->second) {
                relationships.push_back({clone.id, rel->predicate, rel->target});
                ++triples;
            }
        }
        entities.push_back(std::move(clone));
    }
    return CatalogModel("", std::move(entities), std::move(relationships), triples);
}

ScalabilityResult scalability_probe(const CatalogModel& model, const QualityConfig& config,
                                    const ScalabilityOperation& operation) {
    ScalabilityOperation op = operation;
    if (!op) {
        op = [](const CatalogModel& scaled, const QualityConfig& cfg) {
            completeness(scaled, cfg);
        };
    }

    if (config.scalability_sizes.empty()) {
        throw InsufficientDataError("no scalability sizes configured");
    }

    ScalabilityResult out;
    for (int size : config.scalability_sizes) {
        CatalogModel scaled = synthesize_scaled(model, size);
        op(scaled, config);  // warm caches before timing
        std::array<std::int64_t, 3> runs{};
        for (auto& elapsed : runs) {
            auto started = std::chrono::steady_clock::now();
            op(scaled, config);
            elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
        }
        std::sort(runs.begin(), runs.end());
        out.samples.push_back({size, runs[1]});
    }
    out.verdict = out.samples.back().per_record_ns() <=
                  config.scalability_ratio_limit * out.samples.front().per_record_ns();
    return out;
}

VerdictWithFindings freshness(const CatalogModel& model, std::int64_t now,
                              std::optional<int> max_staleness_days) {
    VerdictWithFindings out;
    out.verdict = true;
    std::size_t dated = 0;
    bool have_newest = false;
    std::int64_t newest = 0;
    for (const auto& entity : model.entities()) {
        for (const auto& attr : entity.attributes) {
            if (!is_date_property(attr.property.name)) continue;
            ++dated;
            std::string_view value = trim_view(attr.value.lexical);
            auto parsed = datetime::parse_iso8601(value);
            if (!parsed) {
                out.verdict = false;
                out.findings.push_back({entity.id, attr.property, "unparseable_date",
                                        "'" + std::string(value) + "' is not a valid ISO-8601 date",
                                        Severity::error});
                continue;
            }
            if (!have_newest || *parsed > newest) {
                newest = *parsed;
                have_newest = true;
            }
            if (*parsed >= now) {
                out.verdict = false;
                out.findings.push_back({entity.id, attr.property, "future_date",
                                        datetime::format_iso8601(*parsed) +
                                            " is not earlier than the reference time",
                                        Severity::error});
            }
        }
    }
    if (dated == 0) {
        out.verdict = false;
        out.findings.push_back({model.catalog_node(), std::nullopt, "no_dated_attributes",
                                "no issued or modified dates anywhere in the catalog",
                                Severity::error});
    } else if (out.verdict && max_staleness_days && have_newest &&
               newest < now - static_cast<std::int64_t>(*max_staleness_days) * 86400) {
        out.verdict = false;
        out.findings.push_back({model.catalog_node(), std::nullopt, "stale_data",
                                "newest date " + datetime::format_iso8601(newest) +
                                    " is older than " + std::to_string(*max_staleness_days) +
                                    " days",
                                Severity::error});
    }
    return out;
}

VerdictWithFindings availability(const CatalogModel& model, const net::ProbeMap& probes,
                                 int threshold_ms) {
    VerdictWithFindings out;
    out.verdict = true;
    std::size_t probed = 0;
    for (const auto& entity : model.entities()) {
        for (const auto& attr : entity.attributes) {
            if (attr.property.name != Name::access_url &&
                attr.property.name != Name::download_url) {
                continue;
            }
            std::string_view url = trim_view(attr.value.lexical);
            if (url.empty()) continue;
            const auto& probe = require_probe(probes, url);
            ++probed;
            if (!probe.ok()) {
                out.verdict = false;
                out.findings.push_back({entity.id, attr.property, "failed_url",
                                        std::string(url) + ": " + describe_probe(probe),
                                        Severity::error});
            } else if (probe.response_ms > threshold_ms) {
                out.verdict = false;
                out.findings.push_back({entity.id, attr.property, "slow_url",
                                        std::string(url) + ": " +
                                            std::to_string(probe.response_ms) +
                                            " ms exceeds the " + std::to_string(threshold_ms) +
                                            " ms threshold",
                                        Severity::error});
            }
        }
    }
    if (probed == 0) {
        out.findings.push_back({model.catalog_node(), std::nullopt, "no_probeable_urls",
                                "no access or download URLs to probe", Severity::warning});
    }
    return out;
}

TimelinessResult timeliness(const CatalogModel& model, const net::ProbeMap& probes,
                            const QualityConfig& config) {
    std::int64_t now = config.freshness_reference
                           ? *config.freshness_reference
                           : static_cast<std::int64_t>(std::time(nullptr));
    TimelinessResult out;
    out.freshness = freshness(model, now, config.max_staleness_days);
    out.availability = availability(model, probes, config.availability_threshold_ms);
    out.verdict = out.freshness.verdict && out.availability.verdict;
    return out;
}

}  // namespace dcatq::metrics
