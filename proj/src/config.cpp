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

#include "dcatq/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dcatq/datetime.hpp"
#include "dcatq/errors.hpp"

namespace dcatq {
namespace {

using json = nlohmann::json;
using catalog::EntityKind;
using vocab::Name;

const std::set<std::string> kConsistencyRuleIds = {
    "R1_date_order", "R2_duplicate_label", "R3_language_mismatch", "R4_format_mismatch"};

double require_number(const json& value, const std::string& key) {
    if (!value.is_number()) throw ConfigSchemaError(key, "expected a number");
    return value.get<double>();
}

int require_int(const json& value, const std::string& key) {
    if (!value.is_number_integer()) throw ConfigSchemaError(key, "expected an integer");
    return value.get<int>();
}

std::string require_string(const json& value, const std::string& key) {
    if (!value.is_string()) throw ConfigSchemaError(key, "expected a string");
    return value.get<std::string>();
}

Name requirement_name(const json& value, const std::string& key) {
    std::string text = require_string(value, key);
    auto name = vocab::name_from_string(text);
    if (!name || *name == Name::other) {
        throw ConfigSchemaError(key, "'" + text + "' is not a requirable property");
    }
    return *name;
}

EntityKind require_kind(const std::string& text, const std::string& key) {
    auto kind = catalog::kind_from_string(text);
    if (!kind) throw ConfigSchemaError(key, "'" + text + "' is not an entity kind");
    return *kind;
}

void merge_probe(net::ProbeOptions& probe, const json& value) {
    if (!value.is_object()) throw ConfigSchemaError("probe", "expected an object");
    for (const auto& [key, field] : value.items()) {
        std::string path = "probe." + key;
        if (key == "timeout_ms") {
            int v = require_int(field, path);
            if (v <= 0) throw ConfigSchemaError(path, "must be positive");
            probe.timeout_ms = v;
        } else if (key == "retries") {
            int v = require_int(field, path);
            if (v < 0) throw ConfigSchemaError(path, "must be non-negative");
            probe.retries = v;
        } else if (key == "max_in_flight") {
            int v = require_int(field, path);
            if (v < 1) throw ConfigSchemaError(path, "must be at least 1");
            probe.max_in_flight = v;
        } else {
            throw ConfigSchemaError(path, "unknown key");
        }
    }
}

std::map<EntityKind, std::vector<RequirementGroup>> merge_required_attributes(const json& value) {
    if (!value.is_object()) throw ConfigSchemaError("required_attributes", "expected an object");
    std::map<EntityKind, std::vector<RequirementGroup>> out;
    for (const auto& [kind_text, groups] : value.items()) {
        std::string path = "required_attributes." + kind_text;
        EntityKind kind = require_kind(kind_text, path);
        if (!groups.is_array()) throw ConfigSchemaError(path, "expected an array");
        std::vector<RequirementGroup> parsed;
        for (const auto& group : groups) {
            RequirementGroup rg;
            if (group.is_string()) {
                rg.any_of.push_back(requirement_name(group, path));
            } else if (group.is_array()) {
                if (group.empty()) throw ConfigSchemaError(path, "empty requirement group");
                for (const auto& member : group) rg.any_of.push_back(requirement_name(member, path));
            } else {
                throw ConfigSchemaError(path, "expected a property name or an array of names");
            }
            parsed.push_back(std::move(rg));
        }
        out[kind] = std::move(parsed);
    }
    return out;
}

std::vector<std::pair<EntityKind, Name>> merge_required_relationships(const json& value) {
    const std::string key = "required_relationships";
    if (!value.is_array()) throw ConfigSchemaError(key, "expected an array");
    std::vector<std::pair<EntityKind, Name>> out;
    for (const auto& pair : value) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ConfigSchemaError(key, "expected [kind, property] pairs");
        }
        EntityKind kind = require_kind(require_string(pair.at(0), key), key);
        out.emplace_back(kind, requirement_name(pair.at(1), key));
    }
    return out;
}

QualityConfig merge_config(QualityConfig base, std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigSchemaError("$", e.what());
    }
    if (!doc.is_object()) throw ConfigSchemaError("$", "config must be a JSON object");

    for (const auto& [key, value] : doc.items()) {
        if (key == "alpha") {
            double v = require_number(value, key);
            if (v < 0.0 || v > 1.0) throw ConfigSchemaError(key, "must lie in [0,1]");
            base.alpha = v;
        } else if (key == "availability_threshold_ms") {
            int v = require_int(value, key);
            if (v <= 0) throw ConfigSchemaError(key, "must be positive");
            base.availability_threshold_ms = v;
        } else if (key == "freshness_reference") {
            if (value.is_null()) {
                base.freshness_reference.reset();
                continue;
            }
            std::string text = require_string(value, key);
            auto parsed = datetime::parse_iso8601(text);
            if (!parsed) throw ConfigSchemaError(key, "'" + text + "' is not an ISO-8601 timestamp");
            base.freshness_reference = *parsed;
        } else if (key == "max_staleness_days") {
            if (value.is_null()) {
                base.max_staleness_days.reset();
                continue;
            }
            int v = require_int(value, key);
            if (v <= 0) throw ConfigSchemaError(key, "must be positive");
            base.max_staleness_days = v;
        } else if (key == "required_attributes") {
            base.required_attributes = merge_required_attributes(value);
        } else if (key == "required_relationships") {
            base.required_relationships = merge_required_relationships(value);
        } else if (key == "consistency_rules") {
            if (!value.is_array()) throw ConfigSchemaError(key, "expected an array");
            std::set<std::string> rules;
            for (const auto& rule : value) {
                std::string id = require_string(rule, key);
                if (kConsistencyRuleIds.count(id) == 0) {
                    throw ConfigSchemaError(key, "unknown rule '" + id + "'");
                }
                rules.insert(id);
            }
            base.consistency_rules = std::move(rules);
        } else if (key == "similarity_measure") {
            std::string text = require_string(value, key);
            if (text == "jaccard") base.similarity_measure = SimilarityMeasure::jaccard;
            else if (text == "cosine") base.similarity_measure = SimilarityMeasure::cosine;
            else throw ConfigSchemaError(key, "expected \"jaccard\" or \"cosine\"");
        } else if (key == "pairing_floor") {
            double v = require_number(value, key);
            if (v < 0.0 || v > 1.0) throw ConfigSchemaError(key, "must lie in [0,1]");
            base.pairing_floor = v;
        } else if (key == "scalability_sizes") {
            if (!value.is_array()) throw ConfigSchemaError(key, "expected an array");
            std::vector<int> sizes;
            for (const auto& size : value) {
                int v = require_int(size, key);
                if (v <= 0) throw ConfigSchemaError(key, "sizes must be positive");
                if (!sizes.empty() && v <= sizes.back()) {
                    throw ConfigSchemaError(key, "sizes must be strictly ascending");
                }
                sizes.push_back(v);
            }
            if (sizes.size() < 3) throw ConfigSchemaError(key, "need at least 3 sizes");
            base.scalability_sizes = std::move(sizes);
        } else if (key == "scalability_ratio_limit") {
            double v = require_number(value, key);
            if (v <= 1.0) throw ConfigSchemaError(key, "must exceed 1");
            base.scalability_ratio_limit = v;
        } else if (key == "probe") {
            merge_probe(base.probe, value);
        } else if (key == "predicate_map_path") {
            if (value.is_null()) base.predicate_map_path.reset();
            else base.predicate_map_path = require_string(value, key);
        } else {
            throw ConfigSchemaError(key, "unknown key");
        }
    }
    return base;
}

}  // namespace

std::string_view to_string(SimilarityMeasure measure) {
    return measure == SimilarityMeasure::jaccard ? "jaccard" : "cosine";
}

QualityConfig QualityConfig::defaults() {
    QualityConfig c;
    c.required_attributes = {
        {EntityKind::catalog,
         {{{Name::title}}, {{Name::description}}, {{Name::publisher}}}},
        {EntityKind::dataset,
         {{{Name::title}}, {{Name::description}}, {{Name::publisher}},
          {{Name::issued, Name::modified}}}},
        {EntityKind::distribution,
         {{{Name::access_url, Name::download_url}}, {{Name::format, Name::media_type}}}},
    };
    c.required_relationships = {{EntityKind::dataset, Name::distribution}};
    c.consistency_rules = kConsistencyRuleIds;
    return c;
}

std::string QualityConfig::canonical_json() const {
    json doc;
    doc["alpha"] = alpha;
    doc["availability_threshold_ms"] = availability_threshold_ms;
    if (freshness_reference) doc["freshness_reference"] = datetime::format_iso8601(*freshness_reference);
    else doc["freshness_reference"] = nullptr;
    if (max_staleness_days) doc["max_staleness_days"] = *max_staleness_days;
    else doc["max_staleness_days"] = nullptr;

    json req = json::object();
    for (const auto& [kind, groups] : required_attributes) {
        json list = json::array();
        for (const auto& group : groups) {
            json members = json::array();
            for (auto name : group.any_of) members.push_back(std::string(vocab::to_string(name)));
            list.push_back(std::move(members));
        }
        req[std::string(catalog::to_string(kind))] = std::move(list);
    }
    doc["required_attributes"] = std::move(req);

    json rels = json::array();
    for (const auto& [kind, name] : required_relationships) {
        rels.push_back({std::string(catalog::to_string(kind)), std::string(vocab::to_string(name))});
    }
    doc["required_relationships"] = std::move(rels);

    doc["consistency_rules"] = consistency_rules;
    doc["similarity_measure"] = std::string(to_string(similarity_measure));
    doc["pairing_floor"] = pairing_floor;
    doc["scalability_sizes"] = scalability_sizes;
    doc["scalability_ratio_limit"] = scalability_ratio_limit;
    doc["probe"] = {{"timeout_ms", probe.timeout_ms},
                    {"retries", probe.retries},
                    {"max_in_flight", probe.max_in_flight}};
    if (predicate_map_path) doc["predicate_map_path"] = *predicate_map_path;
    else doc["predicate_map_path"] = nullptr;
    return doc.dump();
}

std::string QualityConfig::digest() const {
    std::string canonical = canonical_json();
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

QualityConfig parse_config(std::string_view json_text) {
    return merge_config(QualityConfig::defaults(), json_text);
}

QualityConfig load_config(const std::optional<std::string>& path) {
    QualityConfig cfg = QualityConfig::defaults();
    if (const char* env = std::getenv("DCATQ_PROBE_TIMEOUT_MS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0 || v > 3600000) {
            throw ConfigSchemaError("DCATQ_PROBE_TIMEOUT_MS", "must be a positive millisecond count");
        }
        cfg.probe.timeout_ms = static_cast<int>(v);
    }
    if (path) {
        std::ifstream in(*path, std::ios::binary);
        if (!in) throw IoError("cannot open " + *path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        if (in.bad()) throw IoError("cannot read " + *path);
        cfg = merge_config(std::move(cfg), buffer.str());
    }
    return cfg;
}

}  // namespace dcatq
