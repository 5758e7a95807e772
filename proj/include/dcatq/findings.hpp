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

#include <optional>
#include <string>
#include <string_view>

#include "dcatq/vocab.hpp"

namespace dcatq {

enum class Severity { error, warning };

std::string_view to_string(Severity severity);

/// One piece of evidence behind a score or verdict.
///
/// Rule registry (stable public ids):
///   empty_value, invalid_date, broken_link            - attribute errors
///   dangling_reference, duplicate_relationship,
///   duplicate_information, no_relationships           - relationship checks
///   missing_required                                  - completeness gaps
///   R1_date_order, R2_duplicate_label,
///   R3_language_mismatch, R4_format_mismatch          - consistency rules
///   future_date, unparseable_date, stale_data,
///   no_dated_attributes                               - freshness
///   slow_url, failed_url, no_probeable_urls           - availability
///   unsupported_scheme, probes_skipped                - probing caveats
///   license_mismatch, temporal_gap                    - comparison advisories
struct Finding {
    std::string entity;
    std::optional<vocab::CanonicalProperty> property;
    std::string rule;
    std::string message;
    Severity severity = Severity::error;
};

}  // namespace dcatq
