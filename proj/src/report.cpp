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

#include "dcatq/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "dcatq/vocab.hpp"

namespace dcatq::report {
namespace {

using nlohmann::json;

std::string two_decimals(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string percent(double value) { return two_decimals(value) + "%"; }

std::string_view yes_no(bool verdict) { return verdict ? "Yes" : "No"; }

std::string display_name(Dimension dimension) {
    std::string name(to_string(dimension));
    name[0] = static_cast<char>(name[0] - 'a' + 'A');
    return name;
}

/// Table cell / text line for one dimension result.
std::string result_text(const DimensionScore& score) {
    if (score.verdict.has_value()) {
        return std::string(yes_no(*score.verdict));
    }
    if (score.dimension == Dimension::readability) {
        return two_decimals(*score.value);  // a grade level, not a percentage
    }
    return percent(*score.value);
}

json finding_json(const Finding& finding) {
    json out;
    out["entity"] = finding.entity;
    out["message"] = finding.message;
    if (finding.property.has_value()) {
        out["property"] = {{"name", std::string(vocab::to_string(finding.property->name))},
                           {"predicate", finding.property->raw_predicate}};
    } else {
        out["property"] = nullptr;
    }
    out["rule"] = finding.rule;
    out["severity"] = std::string(to_string(finding.severity));
    return out;
}

json findings_json(const std::vector<Finding>& findings) {
    json out = json::array();
    for (const Finding& finding : findings) {
        out.push_back(finding_json(finding));
    }
    return out;
}

std::string finding_line(const Finding& finding) {
    std::string line = "[" + std::string(to_string(finding.severity)) + "] " + finding.entity;
    if (finding.property.has_value()) {
        line += " (" + std::string(vocab::to_string(finding.property->name)) + ")";
    }
    line += ": " + finding.message + " [" + finding.rule + "]";
    return line;
}

std::string entity_summary(const QualityReport& report) {
    std::string out;
    for (const auto& [kind, count] : report.entity_counts) {
        if (!out.empty()) {
            out += ", ";
        }
        out += std::to_string(count) + " " + std::string(catalog::to_string(kind));
        if (count != 1) {
            out += 's';
        }
    }
    return out.empty() ? "none" : out;
}

std::string render_json(const QualityReport& report) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["catalog_source"] = report.catalog_source;
    out["assessed_at"] = report.assessed_at;
    out["config_digest"] = report.config_digest;
    json dimensions = json::object();
    for (const DimensionScore& score : report.dimensions) {
        json entry;
        if (score.verdict.has_value()) {
            entry["verdict"] = *score.verdict;
        } else {
            entry["value"] = *score.value;
        }
        entry["details"] = findings_json(score.details);
        dimensions[std::string(to_string(score.dimension))] = entry;
    }
    out["dimensions"] = dimensions;
    json counts = json::object();
    for (const auto& [kind, count] : report.entity_counts) {
        counts[std::string(catalog::to_string(kind))] = count;
    }
    out["entity_counts"] = counts;
    out["findings"] = findings_json(report.findings);
    return out.dump(2) + "\n";
}

std::string render_markdown(const QualityReport& report) {
    std::string out = "# Catalog quality report\n\n";
    out += "- Source: " + report.catalog_source + "\n";
    out += "- Assessed at: " + report.assessed_at + "\n";
    out += "- Config digest: " + report.config_digest + "\n";
    out += "- Entities: " + entity_summary(report) + "\n\n";
    out += "| Dimension | Result |\n| --- | --- |\n";
    for (const DimensionScore& score : report.dimensions) {
        out += "| " + display_name(score.dimension) + " | " + result_text(score) + " |\n";
    }
    out += "\n## Findings\n\n";
    if (report.findings.empty()) {
        out += "None.\n";
    } else {
        for (const Finding& finding : report.findings) {
            out += "- " + finding_line(finding) + "\n";
        }
    }
    return out;
}

std::string render_text(const QualityReport& report) {
    std::string out = "Catalog quality report\n";
    out += "Source:        " + report.catalog_source + "\n";
    out += "Assessed at:   " + report.assessed_at + "\n";
    out += "Config digest: " + report.config_digest + "\n";
    out += "Entities:      " + entity_summary(report) + "\n\n";
    for (const DimensionScore& score : report.dimensions) {
        std::string name = display_name(score.dimension);
        name.resize(14, ' ');
        out += name + result_text(score) + "\n";
    }
    out += "\nFindings (" + std::to_string(report.findings.size()) + "):\n";
    for (const Finding& finding : report.findings) {
        out += "  " + finding_line(finding) + "\n";
    }
    return out;
}

std::string render_json(const ComparisonReport& report) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["sources"] = {report.source1, report.source2};
    out["assessed_at"] = report.assessed_at;
    out["config_digest"] = report.config_digest;
    out["compatibility"] = {{"forward", report.compatibility_forward},
                            {"backward", report.compatibility_backward}};
    out["similarity"] = report.similarity;
    json pairs = json::array();
    for (const metrics::PairedDatasets& pair : report.pairing.pairs) {
        pairs.push_back({{"left", pair.left}, {"right", pair.right}, {"score", pair.score}});
    }
    out["pairing"] = pairs;
    out["advisories"] = findings_json(report.advisories);
    return out.dump(2) + "\n";
}

std::string render_markdown(const ComparisonReport& report) {
    std::string out = "# Catalog comparison\n\n";
    out += "- Source 1: " + report.source1 + "\n";
    out += "- Source 2: " + report.source2 + "\n";
    out += "- Assessed at: " + report.assessed_at + "\n";
    out += "- Config digest: " + report.config_digest + "\n\n";
    out += "| Measure | Result |\n| --- | --- |\n";
    out += "| Compatibility (1 vs 2) | " + percent(report.compatibility_forward) + " |\n";
    out += "| Compatibility (2 vs 1) | " + percent(report.compatibility_backward) + " |\n";
    out += "| Similarity | " + percent(report.similarity) + " |\n";
    out += "| Paired datasets | " + std::to_string(report.pairing.k()) + " |\n";
    out += "\n## Pairing\n\n";
    if (report.pairing.pairs.empty()) {
        out += "None.\n";
    } else {
        for (const metrics::PairedDatasets& pair : report.pairing.pairs) {
            out += "- " + pair.left + " / " + pair.right + " (" +
                   two_decimals(100.0 * pair.score) + "%)\n";
        }
    }
    out += "\n## Advisories\n\n";
    if (report.advisories.empty()) {
        out += "None.\n";
    } else {
        for (const Finding& finding : report.advisories) {
            out += "- " + finding_line(finding) + "\n";
        }
    }
    return out;
}

std::string render_text(const ComparisonReport& report) {
    std::string out = "Catalog comparison\n";
    out += "Source 1:      " + report.source1 + "\n";
    out += "Source 2:      " + report.source2 + "\n";
    out += "Assessed at:   " + report.assessed_at + "\n";
    out += "Config digest: " + report.config_digest + "\n\n";
    out += "Compatibility (1 vs 2)  " + percent(report.compatibility_forward) + "\n";
    out += "Compatibility (2 vs 1)  " + percent(report.compatibility_backward) + "\n";
    out += "Similarity              " + percent(report.similarity) + "\n";
    out += "Paired datasets         " + std::to_string(report.pairing.k()) + "\n";
    for (const metrics::PairedDatasets& pair : report.pairing.pairs) {
        out += "  " + pair.left + " / " + pair.right + " (" + two_decimals(100.0 * pair.score) +
               "%)\n";
    }
    out += "\nAdvisories (" + std::to_string(report.advisories.size()) + "):\n";
    for (const Finding& finding : report.advisories) {
        out += "  " + finding_line(finding) + "\n";
    }
    return out;
}

}  // namespace

std::string_view to_string(Dimension dimension) {
    switch (dimension) {
        case Dimension::accuracy: return "accuracy";
        case Dimension::completeness: return "completeness";
        case Dimension::consistency: return "consistency";
        case Dimension::scalability: return "scalability";
        case Dimension::timeliness: return "timeliness";
        case Dimension::provenance: return "provenance";
        case Dimension::readability: return "readability";
        case Dimension::licensing: return "licensing";
    }
    return "accuracy";
}

std::optional<Dimension> dimension_from_string(std::string_view text) {
    for (Dimension dimension : all_dimensions()) {
        if (to_string(dimension) == text) {
            return dimension;
        }
    }
    return std::nullopt;
}

const std::vector<Dimension>& all_dimensions() {
    static const std::vector<Dimension> kAll = {
        Dimension::accuracy,    Dimension::completeness, Dimension::consistency,
        Dimension::scalability, Dimension::timeliness,   Dimension::provenance,
        Dimension::readability, Dimension::licensing,
    };
    return kAll;
}

bool is_verdict_dimension(Dimension dimension) {
    return dimension == Dimension::scalability || dimension == Dimension::timeliness;
}

std::optional<OutputFormat> format_from_string(std::string_view text) {
    if (text == "json") {
        return OutputFormat::json;
    }
    if (text == "markdown") {
        return OutputFormat::markdown;
    }
    if (text == "text") {
        return OutputFormat::text;
    }
    return std::nullopt;
}

std::string render_report(const QualityReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return render_json(report);
        case OutputFormat::markdown: return render_markdown(report);
        case OutputFormat::text: return render_text(report);
    }
    return render_json(report);
}

std::string render_report(const ComparisonReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return render_json(report);
        case OutputFormat::markdown: return render_markdown(report);
        case OutputFormat::text: return render_text(report);
    }
    return render_json(report);
}

}  // namespace dcatq::report
