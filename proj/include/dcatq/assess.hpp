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

#include <string>
#include <vector>

#include "dcatq/catalog.hpp"
#include "dcatq/config.hpp"
#include "dcatq/net.hpp"
#include "dcatq/report.hpp"

namespace dcatq::assess {

/// Where probe results come from. `none` computes only the dimensions that
/// need no probing; the probe-dependent ones are skipped with a warning.
enum class ProbeMode { live, offline, none };

struct AssessOptions {
    QualityConfig config = QualityConfig::defaults();
    /// Dimensions to compute; empty means all. Duplicates are ignored and
    /// the presentation order is always the canonical one.
    std::vector<report::Dimension> dimensions;
    ProbeMode probe_mode = ProbeMode::live;
    /// Consulted when probe_mode is offline; URLs absent from the store
    /// surface as ProbeMissingError.
    net::FixtureStore fixtures;
};

/// Assess an already-built model. `source_label` only labels the report.
report::QualityReport assess_model(const catalog::CatalogModel& model,
                                   const std::string& source_label,
                                   const AssessOptions& options);

/// Load (honoring config.predicate_map_path) and assess a file or URL.
report::QualityReport assess_source(const std::string& source, const AssessOptions& options);

report::ComparisonReport compare_models(const catalog::CatalogModel& c1,
                                        const catalog::CatalogModel& c2,
                                        const std::string& source1, const std::string& source2,
                                        const AssessOptions& options);

report::ComparisonReport compare_sources(const std::string& source1, const std::string& source2,
                                         const AssessOptions& options);

}  // namespace dcatq::assess
