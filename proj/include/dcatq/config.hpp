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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dcatq/catalog.hpp"
#include "dcatq/net.hpp"
#include "dcatq/vocab.hpp"

namespace dcatq {

enum class SimilarityMeasure { jaccard, cosine };

std::string_view to_string(SimilarityMeasure measure);

/// A completeness requirement satisfied by any one of its members
/// (e.g. issued-or-modified). Single-property requirements have one member.
struct RequirementGroup {
    std::vector<vocab::Name> any_of;

    bool operator==(const RequirementGroup&) const = default;
};

/// Every tunable of an assessment. Defaults are the documented table; a JSON
/// config file merges over them key by key.
struct QualityConfig {
    double alpha = 0.5;
    int availability_threshold_ms = 5000;
    /// Pinned "now" (epoch seconds, UTC) for reproducible freshness checks;
    /// wall clock when absent.
    std::optional<std::int64_t> freshness_reference;
    /// Optional extra freshness bound: newest date must be at most this old.
    std::optional<int> max_staleness_days;
    std::map<catalog::EntityKind, std::vector<RequirementGroup>> required_attributes;
    std::vector<std::pair<catalog::EntityKind, vocab::Name>> required_relationships;
    std::set<std::string> consistency_rules;
    SimilarityMeasure similarity_measure = SimilarityMeasure::jaccard;
    double pairing_floor = 0.0;
    std::vector<int> scalability_sizes = {250, 500, 1000, 2000, 4000};
    double scalability_ratio_limit = 1.5;
    net::ProbeOptions probe;
    std::optional<std::string> predicate_map_path;

    static QualityConfig defaults();

    /// Effective config as key-sorted canonical JSON (digest input and the
    /// report's config echo).
    std::string canonical_json() const;

    /// FNV-1a 64-bit hex digest of canonical_json(); changes iff any
    /// effective tunable changes.
    std::string digest() const;
};

/// Parse a config JSON document and merge it over the defaults. Unknown or
/// out-of-range keys throw ConfigSchemaError.
QualityConfig parse_config(std::string_view json_text);

/// Read an optional config file, apply the DCATQ_PROBE_TIMEOUT_MS
/// environment override, and merge over defaults.
QualityConfig load_config(const std::optional<std::string>& path);

}  // namespace dcatq
