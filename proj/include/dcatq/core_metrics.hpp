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
#include <functional>
#include <string>
#include <vector>

#include "dcatq/catalog.hpp"
#include "dcatq/config.hpp"
#include "dcatq/findings.hpp"
#include "dcatq/net.hpp"
#include "dcatq/rdf.hpp"

namespace dcatq::metrics {

/// A percentage score plus the evidence behind it.
struct ScoreWithFindings {
    double value = 0.0;
    std::vector<Finding> findings;
};

/// A boolean verdict plus the evidence behind it.
struct VerdictWithFindings {
    bool verdict = false;
    std::vector<Finding> findings;
};

/// Binary error of one attribute occurrence: 1.0 when the value is
/// empty/whitespace-only, a date property that fails ISO-8601 parsing, or a
/// URL property whose probe failed; else 0.0. Throws ProbeMissingError when
/// a URL property has no probe entry.
double attribute_error(const catalog::AttributeOccurrence& attr, const net::ProbeMap& probes);

/// 100 * (1/m) * sum(1 - attribute_error). Throws EmptyCatalogError when the
/// model has no attribute occurrences.
ScoreWithFindings attribute_level_accuracy(const catalog::CatalogModel& model,
                                           const net::ProbeMap& probes);

/// Binary error of the relationship at `index` in model order: 1.0 when the
/// target is dangling, the instance repeats an earlier identical one, or the
/// target duplicates an earlier sibling's (title, description) content.
double relationship_error(const catalog::CatalogModel& model, std::size_t index);

/// 100 * (1/r) * sum(1 - relationship_error); vacuously 100 with a warning
/// when the model declares no relationships.
ScoreWithFindings relationship_level_accuracy(const catalog::CatalogModel& model);

/// alpha-weighted blend of attribute- and relationship-level accuracy.
ScoreWithFindings overall_accuracy(const catalog::CatalogModel& model, const net::ProbeMap& probes,
                                   double alpha);

/// 100 * P / Q over the required (entity, property) and (entity,
/// relationship) pair table. Throws EmptyCatalogError when no requirement
/// applies to any entity.
ScoreWithFindings completeness(const catalog::CatalogModel& model, const QualityConfig& config);

struct ConsistencyViolation {
    std::string entity;
    std::string rule;  // R1_date_order .. R4_format_mismatch
    std::vector<rdf::Triple> triples_involved;
};

struct ConsistencyResult {
    double score = 100.0;
    std::vector<ConsistencyViolation> violations;
    std::vector<Finding> findings;
};

/// Evaluate the enabled consistency rules per entity; score is the
/// proportion of entities with zero violations.
ConsistencyResult consistency(const catalog::CatalogModel& model, const QualityConfig& config,
                              const net::ProbeMap& probes);

struct ScalabilitySample {
    int n_records = 0;
    std::int64_t elapsed_ns = 0;  // median of three timed runs

    double per_record_ns() const { return static_cast<double>(elapsed_ns) / n_records; }
};

struct ScalabilityResult {
    bool verdict = false;
    std::vector<ScalabilitySample> samples;
};

/// Clone the model's datasets (attributes and outgoing relationships) up to
/// `n_records` dataset entities with fresh ids; distributions are shared.
catalog::CatalogModel synthesize_scaled(const catalog::CatalogModel& model, int n_records);

using ScalabilityOperation =
    std::function<void(const catalog::CatalogModel&, const QualityConfig&)>;

/// Time `operation` (default: a full completeness scan) on synthetic
/// catalogs at each configured size; verdict = per-record time at the
/// largest size stays within scalability_ratio_limit of the smallest.
/// Throws InsufficientDataError when the model has no datasets.
ScalabilityResult scalability_probe(const catalog::CatalogModel& model,
                                    const QualityConfig& config,
                                    const ScalabilityOperation& operation = {});

/// True iff at least one issued/modified stamp exists and every one parses
/// and precedes `now` (epoch seconds), with an optional staleness bound.
VerdictWithFindings freshness(const catalog::CatalogModel& model, std::int64_t now,
                              std::optional<int> max_staleness_days = {});

/// True iff every probed access/download URL succeeded within the
/// threshold; vacuously true with a warning when nothing is probeable.
VerdictWithFindings availability(const catalog::CatalogModel& model, const net::ProbeMap& probes,
                                 int threshold_ms);

struct TimelinessResult {
    bool verdict = false;
    VerdictWithFindings freshness;
    VerdictWithFindings availability;
};

/// freshness AND availability, both sub-results retained.
TimelinessResult timeliness(const catalog::CatalogModel& model, const net::ProbeMap& probes,
                            const QualityConfig& config);

}  // namespace dcatq::metrics
