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
#include <optional>
#include <string>
#include <string_view>

namespace dcatq::datetime {

/// Parse an ISO-8601 timestamp to seconds since the Unix epoch (UTC).
/// Accepted forms: YYYY, YYYY-MM, YYYY-MM-DD, and YYYY-MM-DD(T| )HH:MM[:SS]
/// with optional fractional seconds and Z / ±HH[:MM] offset. Date-only values
/// are midnight UTC. Returns nullopt for anything else (including
/// calendar-invalid dates such as 2023-02-30).
std::optional<std::int64_t> parse_iso8601(std::string_view text);

/// Render seconds since the epoch as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(std::int64_t seconds);

}  // namespace dcatq::datetime
