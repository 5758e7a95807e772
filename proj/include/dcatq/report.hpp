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
#include <vector>

#include "dcatq/catalog.hpp"
#include "dcatq/cross_metrics.hpp"
#include "dcatq/findings.hpp"

namespace dcatq::report {

/// Bump when the JSON layout changes incompatibly.
inline constexpr int kSchemaVersion = 1;

/// Assessment dimensions in their fixed presentation order.
enum class Dimension {
    accuracy,
    completeness,
    consistency,
    scalability,
    timeliness,
    provenance,
    readability,
    licensing,
};

std::string_view to_string(Dimension dimension);
std::optional<Dimension> dimension_from_string(std::string_view text);
const std::vector<Dimension>& all_dimensions();

/// Scalability and timeliness report a yes/no verdict, everything else a number.
bool is_verdict_dimension(Dimension dimension);

/// One assessed dimension: exactly one of value/verdict is set, plus the
/// findings that explain it.
struct DimensionScore {
    Dimension dimension = Dimension::accuracy;
    std::optional<double> value;
    std::optional<bool> verdict;
    std::vector<Finding> details;
};

struct QualityReport {
    std::string catalog_source;
    std::string assessed_at;    // ISO-8601 UTC
    std::string config_digest;  // digest of the effective config
    std::vector<DimensionScore> dimensions;
    std::vector<Finding> findings;  // pipeline caveats + all dimension details
    std::map<catalog::EntityKind, std::size_t> entity_counts;
};

struct ComparisonReport {
    std::string source1;
    std::string source2;
    std::string assessed_at;
    std::string config_digest;
    double compatibility_forward = 0.0;   // source1 measured against source2
    double compatibility_backward = 0.0;  // source2 measured against source1
    double similarity = 0.0;
    metrics::Pairing pairing;
    std::vector<Finding> advisories;
};

enum class OutputFormat { json, markdown, text };

std::optional<OutputFormat> format_from_string(std::string_view text);

/// Render to a string ending in a newline. JSON output is key-sorted and
/// byte-stable for equal reports; Markdown and text mirror the same numbers.
std::string render_report(const QualityReport& report, OutputFormat format);
std::string render_report(const ComparisonReport& report, OutputFormat format);

}  // namespace dcatq::report
